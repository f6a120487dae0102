import pytest
from hypothesis import given, strategies as st

from revcat.cat import (
    FinObject,
    PInjMorphism,
    compose,
    dagger,
    enumerate_homs,
    join,
    leq,
)
from revcat.errors import DimensionMismatch, IncompatibleJoin

from oracles import count_partial_injections

X2 = FinObject(2)
X3 = FinObject(3)


def pinj(mapping, src=X3, dst=X3):
    return PInjMorphism.from_map(src, dst, mapping)


def test_injectivity_enforced():
    with pytest.raises(DimensionMismatch):
        pinj({0: 1, 2: 1})


def test_dagger_inverts_the_table():
    f = pinj({0: 2, 1: 0})
    assert dagger(f).mapping == {2: 0, 0: 1}
    assert dagger(dagger(f)) == f


def test_compose_threads_partiality():
    f = pinj({0: 1})
    g = pinj({1: 2})
    assert compose(g, f).mapping == {0: 2}
    assert compose(f, g).mapping == {}


def test_strictness_of_composition():
    bottom = PInjMorphism.bottom(X3, X3)
    g = pinj({0: 1, 1: 0})
    assert compose(g, bottom) == bottom
    assert compose(bottom, g) == bottom


def test_leq_is_graph_extension():
    assert leq(pinj({0: 1}), pinj({0: 1, 1: 2}))
    assert not leq(pinj({0: 1}), pinj({0: 2}))
    assert leq(PInjMorphism.bottom(X3, X3), pinj({2: 2}))


def test_join_requires_compatibility():
    small = FinObject(2)
    with pytest.raises(IncompatibleJoin):
        join(pinj({0: 0}, small, small), pinj({0: 1}, small, small))
    with pytest.raises(IncompatibleJoin):
        join(pinj({0: 0}, small, small), pinj({1: 0}, small, small))
    merged = join(pinj({0: 0}, small, small), pinj({1: 1}, small, small))
    assert merged.mapping == {0: 0, 1: 1}
    f = pinj({0: 2})
    assert join(f, PInjMorphism.bottom(X3, X3)) == f


def test_enumeration_matches_counting_formula():
    assert len(enumerate_homs("pinj", X2, X2)) == count_partial_injections(2, 2) == 7
    assert len(enumerate_homs("pinj", X3, X3)) == count_partial_injections(3, 3) == 34
    homs = enumerate_homs("pinj", X3, X2)
    assert len(homs) == len(set(homs)) == count_partial_injections(3, 2)


def injective_tables(n=3, m=3):
    """Random partial injection tables: a permutation image masked per slot."""
    return st.tuples(
        st.permutations(range(m)), st.lists(st.booleans(), min_size=n, max_size=n)
    ).map(
        lambda seed: PInjMorphism(
            FinObject(n),
            FinObject(m),
            tuple(t if keep else None for t, keep in zip(seed[0], seed[1])),
        )
    )


@given(injective_tables(), injective_tables())
def test_dagger_properties_on_random_injections(f, g):
    assert dagger(dagger(f)) == f
    assert dagger(compose(g, f)) == compose(dagger(f), dagger(g))
    assert compose(dagger(f), f).mapping.keys() <= f.mapping.keys()
    # restriction to the domain of definition: f . f+ . f = f
    assert compose(f, compose(dagger(f), f)) == f


@given(injective_tables())
def test_embedding_commutes_with_dagger_on_random_injections(f):
    assert dagger(f).to_rel() == dagger(f.to_rel())


def test_embedding_into_rel_is_a_faithful_dagger_functor():
    homs2 = enumerate_homs("pinj", X2, X2)
    for f in homs2:
        assert dagger(f).to_rel() == dagger(f.to_rel())
        for g in homs2:
            assert compose(g, f).to_rel() == compose(g.to_rel(), f.to_rel())
            assert leq(f, g) == leq(f.to_rel(), g.to_rel())
    assert len({f.to_rel() for f in homs2}) == len(homs2)  # faithful
