"""Category-generic operations over the three concrete morphism families."""
from __future__ import annotations

from functools import reduce

import numpy as np

from ..errors import DimensionMismatch, UnsupportedOperation
from ..order import HomDomain
from .dstoch import DEFAULT_TOLERANCE, StochMorphism
from .objects import FinObject
from .pinj import PInjMorphism, enumerate_pinj
from .rel import RelMorphism, enumerate_rel

REL = "rel"
PINJ = "pinj"
DSTOCH = "dstoch"
CATEGORIES = (REL, PINJ, DSTOCH)

_CLASSES = {REL: RelMorphism, PINJ: PInjMorphism, DSTOCH: StochMorphism}


def category_of(morphism) -> str:
    for name, cls in _CLASSES.items():
        if isinstance(morphism, cls):
            return name
    raise TypeError(f"not a morphism: {morphism!r}")


def compose(g, f):
    """g . f (apply f first)."""
    if type(g) is not type(f):
        raise DimensionMismatch("cannot compose across categories")
    return g.compose(f)


def dagger(f):
    return f.dagger()


def leq(f, g) -> bool:
    return f.leq(g)


def join(f, g):
    return f.join(g)


def identity(category: str, obj: FinObject):
    return _CLASSES[category].identity(obj)


def bottom(category: str, src: FinObject, dst: FinObject):
    return _CLASSES[category].bottom(src, dst)


def enumerate_homs(category: str, src: FinObject, dst: FinObject, cap: int = 9) -> list:
    if category == REL:
        return enumerate_rel(src, dst, cap)
    if category == PINJ:
        return enumerate_pinj(src, dst, cap)
    raise UnsupportedOperation(f"cannot enumerate {category} hom-sets")


def is_hermitian(f) -> bool:
    if f.src != f.dst:
        raise DimensionMismatch("hermitian only makes sense on endomorphisms")
    if isinstance(f, StochMorphism):
        return f.isclose(f.dagger())
    return f == f.dagger()


def is_unitary(f) -> bool:
    left = compose(f.dagger(), f)
    right = compose(f, f.dagger())
    id_src = identity(category_of(f), f.src)
    id_dst = identity(category_of(f), f.dst)
    if isinstance(f, StochMorphism):
        return left.isclose(id_src) and right.isclose(id_dst)
    return left == id_src and right == id_dst


def sup_chain(category: str, chain):
    """Supremum of a finite ascending sequence within one hom-set."""
    seq = list(chain)
    if not seq:
        raise ValueError("chain must be non-empty")
    if category in (REL, PINJ):
        return reduce(join, seq)
    stacked = np.stack([m.matrix for m in seq])
    return StochMorphism(seq[0].src, seq[0].dst, stacked.max(axis=0))


def hom_domain(
    category: str,
    src: FinObject,
    dst: FinObject,
    cap: int = 9,
    tolerance: float = DEFAULT_TOLERANCE,
) -> HomDomain:
    """Build the pointed order on the hom-set as seen by the fixed-point engine."""
    cls = _CLASSES[category]

    def contains(m) -> bool:
        return isinstance(m, cls) and m.src == src and m.dst == dst

    enumerate_all = None
    if category in (REL, PINJ) and src.size * dst.size <= cap:
        enumerate_all = lambda: enumerate_homs(category, src, dst, cap)

    metric = None
    less = leq
    if category == DSTOCH:
        metric = lambda a, b: a.distance(b)
        less = lambda a, b: a.leq(b, tolerance)

    return HomDomain(
        objects=(src, dst),
        bottom=cls.bottom(src, dst),
        leq=less,
        sup_chain=lambda chain: sup_chain(category, chain),
        enumerate_all=enumerate_all,
        metric=metric,
        contains=contains,
    )
