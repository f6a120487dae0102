"""A closed DSL of continuous hom-set functionals, plus conjugation.

Every node denotes a continuous map between two hom-sets.  Conjugation
rewrites the tree symbolically (daggering embedded morphisms and flipping
the declared spaces); an opaque Host node is conjugated extensionally by
wrapping it between daggers.  Both agree pointwise with h |-> phi(h+)+.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from ..cat import dagger, join, morphism_from_doc, morphism_to_doc
from ..errors import DimensionMismatch, ParseError, UnsupportedOperation
from .spaces import HomSpace, space_of


@dataclass(frozen=True)
class FunctionalExpr:
    """Base class; every node exposes declared dom/cod hom-spaces."""

    def __call__(self, h):
        return apply_functional(self, h)


@dataclass(frozen=True)
class Const(FunctionalExpr):
    value: object
    dom: HomSpace

    @property
    def cod(self) -> HomSpace:
        return space_of(self.value)


@dataclass(frozen=True)
class IdentityFn(FunctionalExpr):
    dom: HomSpace

    @property
    def cod(self) -> HomSpace:
        return self.dom


@dataclass(frozen=True)
class PreCompose(FunctionalExpr):
    """h |-> h . m, reindexing the source along m."""

    value: object
    dom: HomSpace

    def __post_init__(self):
        sp = space_of(self.value)
        if sp.category != self.dom.category or sp.dst != self.dom.src:
            raise DimensionMismatch(f"precompose {sp!r} against domain {self.dom!r}")

    @property
    def cod(self) -> HomSpace:
        return HomSpace(self.dom.category, space_of(self.value).src, self.dom.dst)


@dataclass(frozen=True)
class PostCompose(FunctionalExpr):
    """h |-> m . h, reindexing the target along m."""

    value: object
    dom: HomSpace

    def __post_init__(self):
        sp = space_of(self.value)
        if sp.category != self.dom.category or sp.src != self.dom.dst:
            raise DimensionMismatch(f"postcompose {sp!r} against domain {self.dom!r}")

    @property
    def cod(self) -> HomSpace:
        return HomSpace(self.dom.category, self.dom.src, space_of(self.value).dst)


@dataclass(frozen=True)
class DaggerFn(FunctionalExpr):
    dom: HomSpace

    @property
    def cod(self) -> HomSpace:
        return self.dom.flipped()


@dataclass(frozen=True)
class JoinWith(FunctionalExpr):
    value: object

    def __post_init__(self):
        if space_of(self.value).category == "dstoch":
            raise UnsupportedOperation("joins are not provided for dstoch")

    @property
    def dom(self) -> HomSpace:
        return space_of(self.value)

    @property
    def cod(self) -> HomSpace:
        return space_of(self.value)


@dataclass(frozen=True)
class Seq(FunctionalExpr):
    first: FunctionalExpr
    second: FunctionalExpr

    def __post_init__(self):
        if self.first.cod != self.second.dom:
            raise DimensionMismatch(
                f"cannot chain {self.first.cod!r} into {self.second.dom!r}"
            )

    @property
    def dom(self) -> HomSpace:
        return self.first.dom

    @property
    def cod(self) -> HomSpace:
        return self.second.cod


@dataclass(frozen=True)
class JoinOf(FunctionalExpr):
    left: FunctionalExpr
    right: FunctionalExpr

    def __post_init__(self):
        if self.left.dom != self.right.dom or self.left.cod != self.right.cod:
            raise DimensionMismatch("joined functionals must share dom and cod")

    @property
    def dom(self) -> HomSpace:
        return self.left.dom

    @property
    def cod(self) -> HomSpace:
        return self.left.cod


@dataclass(frozen=True)
class Host(FunctionalExpr):
    """Opaque host-language functional; not serializable."""

    fn: Callable
    dom: HomSpace
    cod: HomSpace
    name: str = "host"


def apply_functional(phi: FunctionalExpr, h):
    if space_of(h) != phi.dom:
        raise DimensionMismatch(f"{h!r} is not in {phi.dom!r}")
    return _apply(phi, h)


def _apply(phi, h):
    if isinstance(phi, Const):
        return phi.value
    if isinstance(phi, IdentityFn):
        return h
    if isinstance(phi, PreCompose):
        return h.compose(phi.value)
    if isinstance(phi, PostCompose):
        return phi.value.compose(h)
    if isinstance(phi, DaggerFn):
        return dagger(h)
    if isinstance(phi, JoinWith):
        return join(h, phi.value)
    if isinstance(phi, Seq):
        return _apply(phi.second, _apply(phi.first, h))
    if isinstance(phi, JoinOf):
        return join(_apply(phi.left, h), _apply(phi.right, h))
    if isinstance(phi, Host):
        return phi.fn(h)
    raise TypeError(f"not a functional expression: {phi!r}")


def conj(phi: FunctionalExpr) -> FunctionalExpr:
    """The conjugate functional, extensionally h |-> phi(h+)+."""
    if isinstance(phi, Const):
        return Const(dagger(phi.value), phi.dom.flipped())
    if isinstance(phi, IdentityFn):
        return IdentityFn(phi.dom.flipped())
    if isinstance(phi, PreCompose):
        return PostCompose(dagger(phi.value), phi.dom.flipped())
    if isinstance(phi, PostCompose):
        return PreCompose(dagger(phi.value), phi.dom.flipped())
    if isinstance(phi, DaggerFn):
        return DaggerFn(phi.dom.flipped())
    if isinstance(phi, JoinWith):
        return JoinWith(dagger(phi.value))
    if isinstance(phi, Seq):
        return Seq(conj(phi.first), conj(phi.second))
    if isinstance(phi, JoinOf):
        return JoinOf(conj(phi.left), conj(phi.right))
    if isinstance(phi, Host):
        return Host(
            lambda h, fn=phi.fn: dagger(fn(dagger(h))),
            phi.dom.flipped(),
            phi.cod.flipped(),
            name=f"conj({phi.name})",
        )
    raise TypeError(f"not a functional expression: {phi!r}")


# -- serialization ----------------------------------------------------------


def _space_to_doc(space: HomSpace) -> dict:
    return {"cat": space.category, "src": space.src.size, "dst": space.dst.size}


def _space_from_doc(doc: dict) -> HomSpace:
    from ..cat import FinObject

    return HomSpace(doc["cat"], FinObject(int(doc["src"])), FinObject(int(doc["dst"])))


def functional_to_doc(phi: FunctionalExpr) -> dict:
    if isinstance(phi, Const):
        return {"op": "const", "m": morphism_to_doc(phi.value), "dom": _space_to_doc(phi.dom)}
    if isinstance(phi, IdentityFn):
        return {"op": "identity", "dom": _space_to_doc(phi.dom)}
    if isinstance(phi, PreCompose):
        return {"op": "precompose", "m": morphism_to_doc(phi.value), "dom": _space_to_doc(phi.dom)}
    if isinstance(phi, PostCompose):
        return {"op": "postcompose", "m": morphism_to_doc(phi.value), "dom": _space_to_doc(phi.dom)}
    if isinstance(phi, DaggerFn):
        return {"op": "dagger", "dom": _space_to_doc(phi.dom)}
    if isinstance(phi, JoinWith):
        return {"op": "joinwith", "m": morphism_to_doc(phi.value)}
    if isinstance(phi, Seq):
        # Unary nodes absorb a leading pipeline stage as "inner".
        inner = functional_to_doc(phi.first)
        outer = functional_to_doc(phi.second)
        if outer["op"] in ("const", "identity", "precompose", "postcompose", "dagger", "joinwith"):
            outer["inner"] = inner
            return outer
        return {"op": "seq", "first": inner, "second": outer}
    if isinstance(phi, JoinOf):
        return {
            "op": "joinof",
            "left": functional_to_doc(phi.left),
            "right": functional_to_doc(phi.right),
        }
    raise TypeError(f"{phi!r} is not serializable")


def _affine_host(doc: dict) -> Host:
    """Entrywise a |-> shift * I + scale * a on square stochastic matrices."""
    import numpy as np

    from ..cat import DSTOCH, FinObject, StochMorphism

    n = int(doc["n"])
    scale = float(doc["scale"])
    shift = float(doc["shift"])
    obj = FinObject(n)
    space = HomSpace(DSTOCH, obj, obj)

    def step(a):
        return StochMorphism(obj, obj, shift * np.eye(n) + scale * a.matrix)

    return Host(step, space, space, name=f"affine({shift}+{scale}a)")


HOST_BUILDERS = {"affine": _affine_host}

_KNOWN_FIELDS = {
    "const": {"op", "m", "dom", "inner"},
    "identity": {"op", "dom", "inner"},
    "precompose": {"op", "m", "dom", "inner"},
    "postcompose": {"op", "m", "dom", "inner"},
    "dagger": {"op", "dom", "inner"},
    "joinwith": {"op", "m", "inner"},
    "seq": {"op", "first", "second"},
    "joinof": {"op", "left", "right"},
    "host": {"op", "name", "n", "scale", "shift", "inner"},
}


def functional_from_doc(doc: dict, dom: HomSpace | None = None) -> FunctionalExpr:
    """Decode a functional document.

    ``dom`` supplies the domain for nodes that cannot infer it; square
    morphism arguments default to an endo space on their own objects.
    """
    if not isinstance(doc, dict) or "op" not in doc:
        raise ParseError("functional document must be an object with an 'op' field")
    op = doc["op"]
    if op not in _KNOWN_FIELDS:
        raise ParseError(f"unknown functional op {op!r}")
    extra = set(doc) - _KNOWN_FIELDS[op]
    if extra:
        raise ParseError(f"unknown fields on {op!r} node: {sorted(extra)}")

    inner = None
    if "inner" in doc:
        inner = functional_from_doc(doc["inner"], dom)
        dom = inner.cod

    if "dom" in doc:
        dom = _space_from_doc(doc["dom"])

    if op == "const":
        m = morphism_from_doc(doc["m"])
        node = Const(m, dom if dom is not None else space_of(m))
    elif op == "identity":
        if dom is None:
            raise ParseError("identity node needs a 'dom' space")
        node = IdentityFn(dom)
    elif op == "precompose":
        m = morphism_from_doc(doc["m"])
        sp = space_of(m)
        node = PreCompose(m, dom if dom is not None else HomSpace(sp.category, sp.dst, sp.dst))
    elif op == "postcompose":
        m = morphism_from_doc(doc["m"])
        sp = space_of(m)
        node = PostCompose(m, dom if dom is not None else HomSpace(sp.category, sp.src, sp.src))
    elif op == "dagger":
        if dom is None:
            raise ParseError("dagger node needs a 'dom' space")
        node = DaggerFn(dom)
    elif op == "joinwith":
        node = JoinWith(morphism_from_doc(doc["m"]))
    elif op == "host":
        builder = HOST_BUILDERS.get(doc.get("name"))
        if builder is None:
            raise ParseError(f"unknown host functional {doc.get('name')!r}")
        node = builder(doc)
    elif op == "seq":
        first = functional_from_doc(doc["first"], dom)
        second = functional_from_doc(doc["second"], first.cod)
        return Seq(first, second)
    else:  # joinof
        left = functional_from_doc(doc["left"], dom)
        right = functional_from_doc(doc["right"], dom)
        return JoinOf(left, right)

    return node if inner is None else Seq(inner, node)


def loads_functional(text: str) -> FunctionalExpr:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return functional_from_doc(doc)


def dumps_functional(phi: FunctionalExpr) -> str:
    return json.dumps(functional_to_doc(phi), sort_keys=True)
