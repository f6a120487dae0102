from random import Random

import numpy as np
import pytest

from revcat.cat import (
    FinObject,
    StochMorphism,
    compose,
    dagger,
    enumerate_homs,
    is_hermitian,
    is_unitary,
    join,
    random_chain,
    random_ordered_pair,
    random_stoch,
    sup_chain,
)
from revcat.errors import DimensionMismatch, UnsupportedOperation

X2 = FinObject(2)


def test_invariants_enforced_at_construction():
    with pytest.raises(DimensionMismatch):
        StochMorphism(X2, X2, [[-0.2, 0.0], [0.0, 0.0]])
    with pytest.raises(DimensionMismatch):
        StochMorphism(X2, X2, [[0.8, 0.8], [0.0, 0.0]])  # row sum > 1
    with pytest.raises(DimensionMismatch):
        StochMorphism(X2, X2, [[0.8, 0.0], [0.8, 0.0]])  # column sum > 1
    with pytest.raises(DimensionMismatch):
        StochMorphism(X2, FinObject(3), np.zeros((2, 3)))


def test_compose_is_matrix_product_in_diagram_order():
    f = StochMorphism(X2, X2, [[0.5, 0.25], [0.25, 0.5]])
    g = StochMorphism(X2, X2, [[0.3, 0.2], [0.2, 0.3]])
    assert np.allclose(compose(g, f).matrix, f.matrix @ g.matrix)


def test_dagger_is_transpose_and_order_is_entrywise():
    f = StochMorphism(X2, X2, [[0.1, 0.4], [0.3, 0.2]])
    assert np.array_equal(dagger(f).matrix, f.matrix.T)
    smaller = StochMorphism(X2, X2, [[0.05, 0.4], [0.3, 0.1]])
    assert smaller.leq(f)
    assert not f.leq(smaller)
    one_by_one_a = StochMorphism(FinObject(1), FinObject(1), [[0.3]])
    one_by_one_b = StochMorphism(FinObject(1), FinObject(1), [[0.2]])
    assert not one_by_one_a.leq(one_by_one_b)


def test_joins_and_enumeration_are_not_provided():
    f = random_stoch(X2, Random(0))
    with pytest.raises(UnsupportedOperation):
        join(f, f)
    with pytest.raises(UnsupportedOperation):
        enumerate_homs("dstoch", X2, X2)


def test_unitary_permutation_matrix():
    swap = StochMorphism(X2, X2, [[0.0, 1.0], [1.0, 0.0]])
    assert is_unitary(swap)
    assert not is_hermitian(StochMorphism(X2, X2, [[0.0, 0.5], [0.0, 0.0]]))


def test_invariants_preserved_by_compose_dagger_and_sup():
    rng = Random(11)
    for _ in range(200):
        f = random_stoch(X2, rng)
        g = random_stoch(X2, rng)
        for candidate in (compose(g, f), dagger(f)):
            m = candidate.matrix
            assert np.all(m >= -1e-12)
            assert np.all(m.sum(axis=0) <= 1 + 1e-9)
            assert np.all(m.sum(axis=1) <= 1 + 1e-9)
        chain = random_chain(X2, rng, 4)
        sup = sup_chain("dstoch", chain)
        assert np.all(sup.matrix.sum(axis=0) <= 1 + 1e-9)
        assert np.all(sup.matrix.sum(axis=1) <= 1 + 1e-9)
        for link in chain:
            assert link.leq(sup)


def test_random_generators_are_seed_deterministic():
    a = random_stoch(X2, Random(5))
    b = random_stoch(X2, Random(5))
    assert a == b
    fa, ga = random_ordered_pair(X2, Random(9))
    fb, gb = random_ordered_pair(X2, Random(9))
    assert fa == fb and ga == gb
    assert fa.leq(ga)
