import pytest

from revcat.cat import FinObject, PInjMorphism, RelMorphism, dagger
from revcat.errors import DimensionMismatch
from revcat.functionals import check_dagger_trace, trace

from oracles import orbit_trace

O1, O2 = FinObject(1), FinObject(2)
X3 = FinObject(3)


def test_orbit_example_threads_through_the_feedback_block():
    # x -> u0, u0 -> u1, u1 -> y on blocks X=Y=1, U=2
    f = PInjMorphism.from_map(X3, X3, {0: 1, 1: 2, 2: 0})
    traced = trace(f, O1, O1, O2)
    assert traced.mapping == orbit_trace({0: 1, 1: 2, 2: 0}, 1, 1, 2) == {0: 0}


def test_no_entry_into_feedback_returns_the_plain_block():
    f = PInjMorphism.from_map(X3, X3, {0: 0, 1: 2, 2: 1})
    traced = trace(f, O1, O1, O2)
    assert traced.mapping == {0: 0}


def test_dying_orbit_is_undefined_in_pinj():
    # x -> u0, u0 -> u1, then undefined: never exits
    f = PInjMorphism.from_map(X3, X3, {0: 1, 1: 2})
    traced = trace(f, O1, O1, O2)
    assert traced.mapping == orbit_trace({0: 1, 1: 2}, 1, 1, 2) == {}


def test_cycling_orbit_without_exit_is_undefined_in_rel():
    # x -> u0, u0 -> u1, u1 -> u0: a 2-cycle with empty exit block
    f = RelMorphism.from_pairs(X3, X3, [(0, 1), (1, 2), (2, 1)])
    traced = trace(f, O1, O1, O2)
    assert traced.pairs == []


def test_rel_trace_collects_all_exits():
    # x -> {u0, y directly}; u0 -> {u0, y}: both routes land on y
    f = RelMorphism.from_pairs(FinObject(2), FinObject(2), [(0, 0), (0, 1), (1, 1), (1, 0)])
    traced = trace(f, O1, O1, O1)
    assert traced.pairs == [(0, 0)]


def test_trace_dimension_check():
    f = PInjMorphism.bottom(X3, FinObject(2))
    with pytest.raises(DimensionMismatch):
        trace(f, O1, O1, O2)


@pytest.mark.parametrize(
    "category,shape",
    [
        ("pinj", (1, 1, 0)),
        ("pinj", (1, 1, 1)),
        ("pinj", (1, 1, 2)),
        ("rel", (1, 1, 1)),
    ],
)
def test_dagger_trace_exhaustive(category, shape):
    report = check_dagger_trace(category, *shape)
    assert report.passed, report.violations[:2]
    assert report.by_law["trace-dagger"] > 0
    assert report.by_law["trace-natural"] > 0


def test_identity_trace_is_identity_on_the_visible_block():
    ident = PInjMorphism.identity(X3)
    traced = trace(ident, O1, O1, O2)
    assert traced == PInjMorphism.identity(O1)
    assert dagger(traced) == traced


@pytest.mark.parametrize("category", ["rel", "pinj"])
def test_sliding_dinaturality_optional_check(category):
    report = check_dagger_trace(
        category, 1, 1, 2, include_naturality=False, include_dinaturality=True
    )
    assert report.passed
    assert report.by_law.get("trace-sliding", 0) > 0
