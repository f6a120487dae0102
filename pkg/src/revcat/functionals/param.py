"""Two-argument functional expressions: trees over a recursion argument
and a parameter argument.

A node denotes a continuous map Hom(X,Y) x Hom(P,Q) -> Hom(A,B).  Unary
behaviour is borrowed from the one-argument DSL via PApply, so conjugation
stays a homomorphic rewrite.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..cat import join
from ..errors import DimensionMismatch
from .expr import FunctionalExpr, apply_functional
from .expr import conj as conj1
from .spaces import HomSpace, space_of


@dataclass(frozen=True)
class ParamExpr:
    def __call__(self, x, p):
        return apply_param(self, x, p)


@dataclass(frozen=True)
class ArgX(ParamExpr):
    arg_space: HomSpace
    param_space: HomSpace

    @property
    def cod(self) -> HomSpace:
        return self.arg_space


@dataclass(frozen=True)
class ArgP(ParamExpr):
    arg_space: HomSpace
    param_space: HomSpace

    @property
    def cod(self) -> HomSpace:
        return self.param_space


@dataclass(frozen=True)
class PConst(ParamExpr):
    value: object
    arg_space: HomSpace
    param_space: HomSpace

    @property
    def cod(self) -> HomSpace:
        return space_of(self.value)


@dataclass(frozen=True)
class PApply(ParamExpr):
    phi: FunctionalExpr
    inner: ParamExpr

    def __post_init__(self):
        if self.phi.dom != self.inner.cod:
            raise DimensionMismatch(
                f"cannot pipe {self.inner.cod!r} into {self.phi.dom!r}"
            )

    @property
    def arg_space(self) -> HomSpace:
        return self.inner.arg_space

    @property
    def param_space(self) -> HomSpace:
        return self.inner.param_space

    @property
    def cod(self) -> HomSpace:
        return self.phi.cod


@dataclass(frozen=True)
class PJoin(ParamExpr):
    left: ParamExpr
    right: ParamExpr

    def __post_init__(self):
        if (
            self.left.cod != self.right.cod
            or self.left.arg_space != self.right.arg_space
            or self.left.param_space != self.right.param_space
        ):
            raise DimensionMismatch("joined branches must share all spaces")

    @property
    def arg_space(self) -> HomSpace:
        return self.left.arg_space

    @property
    def param_space(self) -> HomSpace:
        return self.left.param_space

    @property
    def cod(self) -> HomSpace:
        return self.left.cod


def apply_param(psi: ParamExpr, x, p):
    if space_of(x) != psi.arg_space:
        raise DimensionMismatch(f"{x!r} is not in {psi.arg_space!r}")
    if space_of(p) != psi.param_space:
        raise DimensionMismatch(f"{p!r} is not in {psi.param_space!r}")
    return _apply(psi, x, p)


def _apply(psi, x, p):
    if isinstance(psi, ArgX):
        return x
    if isinstance(psi, ArgP):
        return p
    if isinstance(psi, PConst):
        return psi.value
    if isinstance(psi, PApply):
        return apply_functional(psi.phi, _apply(psi.inner, x, p))
    if isinstance(psi, PJoin):
        return join(_apply(psi.left, x, p), _apply(psi.right, x, p))
    raise TypeError(f"not a parametrized expression: {psi!r}")


def conj_param(psi: ParamExpr) -> ParamExpr:
    """Conjugate both arguments: extensionally (x, p) |-> psi(x+, p+)+."""
    from ..cat import dagger

    if isinstance(psi, ArgX):
        return ArgX(psi.arg_space.flipped(), psi.param_space.flipped())
    if isinstance(psi, ArgP):
        return ArgP(psi.arg_space.flipped(), psi.param_space.flipped())
    if isinstance(psi, PConst):
        return PConst(
            dagger(psi.value),
            psi.arg_space.flipped(),
            psi.param_space.flipped(),
        )
    if isinstance(psi, PApply):
        return PApply(conj1(psi.phi), conj_param(psi.inner))
    if isinstance(psi, PJoin):
        return PJoin(conj_param(psi.left), conj_param(psi.right))
    raise TypeError(f"not a parametrized expression: {psi!r}")
