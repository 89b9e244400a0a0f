import itertools

import pytest
from hypothesis import given, settings, strategies as st

from downset_codes.errors import BudgetExceeded, DimensionError, ParameterError
from downset_codes.gf import FpVector, iter_space
from downset_codes.poset import (
    DownSet, canonicalize, complement_enumerate, contains, enumerate_members, join_meet,
    leq, maximal_elements, parse_downset, size,
)

from conftest import downsets


def V(p, *xs):
    return FpVector(p, xs)


def test_leq_examples():
    assert leq(V(3, 0, 0), V(3, 2, 1))
    assert not leq(V(3, 1, 2), V(3, 2, 1))
    assert not leq(V(3, 2, 1), V(3, 1, 2))
    v = V(5, 4, 0, 3)
    assert leq(v, v)
    with pytest.raises(DimensionError):
        leq(V(3, 1), V(3, 1, 0))


def test_join_meet_examples():
    j, m = join_meet(V(3, 1, 2), V(3, 2, 1))
    assert j == V(3, 2, 2) and m == V(3, 1, 1)
    v, z = V(5, 3, 1, 4), FpVector.zero(5, 3)
    assert join_meet(v, z) == (v, z)
    assert join_meet(v, v) == (v, v)


def test_contains_examples():
    d = DownSet.generated_by(3, 2, (1, 0))
    assert contains(d, V(3, 1, 0))
    assert not contains(d, V(3, 0, 1))
    two = DownSet.generated_by(3, 2, (1, 0), (0, 1))
    members = {v for v in iter_space(3, 2) if contains(two, v)}
    assert members == {V(3, 0, 0), V(3, 1, 0), V(3, 0, 1)}


def test_canonicalize_examples():
    assert canonicalize([V(3, 1, 0), V(3, 2, 0)]).generators == (V(3, 2, 0),)
    assert canonicalize([V(3, 1, 1)]).generators == (V(3, 1, 1),)
    assert canonicalize([V(3, 1, 0), V(3, 0, 1), V(3, 1, 0)]).generators == (V(3, 0, 1), V(3, 1, 0))
    empty = canonicalize([], p=3, m=2)
    assert empty.is_empty and size(empty) == 0


def brute_size(delta):
    return sum(1 for v in iter_space(delta.p, delta.m) if contains(delta, v))


@pytest.mark.parametrize("p, m, gen, expected", [
    (3, 3, (1, 0, 0), 2),
    (3, 3, (2, 1, 0), 6),
    (5, 3, (4, 2, 0), 15),
    (7, 2, (3, 0), 4),
])
def test_size_single_generator(p, m, gen, expected):
    d = DownSet.generated_by(p, m, gen)
    assert brute_size(d) == expected
    assert size(d) == expected


def test_size_two_chains():
    assert size(DownSet.generated_by(3, 2, (1, 0), (0, 1))) == 3


def test_enumerate_examples():
    d = DownSet.generated_by(3, 2, (1, 0))
    assert enumerate_members(d) == [V(3, 0, 0), V(3, 1, 0)]
    comp = complement_enumerate(d)
    assert len(comp) == 7
    assert comp == sorted(comp, key=lambda v: v.entries)
    top = DownSet.generated_by(3, 2, (2, 2))
    assert complement_enumerate(top) == []
    empty = DownSet.empty(3, 2)
    assert enumerate_members(empty) == []
    assert complement_enumerate(empty) == list(iter_space(3, 2))


def test_enumeration_budget():
    d = DownSet.generated_by(7, 9, (1,) + (0,) * 8)
    with pytest.raises(BudgetExceeded):
        enumerate_members(d)


def test_parse_and_format():
    d, dropped = parse_downset("2,1,0; 1,0,0;1,2,0", 3)
    assert d.to_text() == "1,2,0;2,1,0"
    assert dropped == [V(3, 1, 0, 0)]
    with pytest.raises(ParameterError):
        parse_downset("3,0", 3)
    with pytest.raises(ParameterError):
        parse_downset("1,x", 3)
    with pytest.raises(ParameterError):
        parse_downset("1,0;1", 3)
    e, _ = parse_downset("", 3, 2)
    assert e.is_empty


@st.composite
def space_downsets(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    m = draw(st.integers(1, 4))
    return draw(downsets(p, m))


@settings(max_examples=200)
@given(space_downsets(), st.data())
def test_downward_closure(delta, data):
    members = enumerate_members(delta)
    v = data.draw(st.sampled_from(members))
    w = FpVector(delta.p, tuple(data.draw(st.integers(0, x)) for x in v.entries))
    assert leq(w, v)
    assert contains(delta, w)


@given(space_downsets())
def test_size_matches_enumeration(delta):
    members = enumerate_members(delta)
    assert size(delta) == len(members)
    assert len(members) + len(complement_enumerate(delta)) == delta.p ** delta.m


@given(space_downsets())
def test_round_trip_maximal_elements(delta):
    assert tuple(maximal_elements(enumerate_members(delta))) == delta.generators


@given(space_downsets())
def test_canonicalize_idempotent_and_antichain(delta):
    again = canonicalize(delta.generators, p=delta.p, m=delta.m)
    assert again == delta
    for g, h in itertools.permutations(delta.generators, 2):
        assert not leq(g, h)
