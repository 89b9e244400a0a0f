import pytest
from hypothesis import given, strategies as st

from downset_codes.errors import DimensionError
from downset_codes.gf import hamming_distance
from downset_codes.ring import (
    RingElement, RingVector, gray_inverse, gray_map, inner_product, lee_weight,
)


@st.composite
def ring_vectors(draw, p=None, m=None):
    p = draw(st.sampled_from([2, 3, 5, 7])) if p is None else p
    m = draw(st.integers(1, 5)) if m is None else m
    a = draw(st.lists(st.integers(0, p - 1), min_size=m, max_size=m))
    b = draw(st.lists(st.integers(0, p - 1), min_size=m, max_size=m))
    return RingVector.of(p, a, b)


@st.composite
def ring_pairs(draw):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    m = draw(st.integers(1, 5))
    return draw(ring_vectors(p, m)), draw(ring_vectors(p, m))


def test_ring_multiplication_kills_u_squared():
    p = 5
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    prod = RingElement(p, a, b) * RingElement(p, c, d)
                    assert (prod.a, prod.b) == ((a * c) % p, (a * d + b * c) % p)
    u = RingElement(p, 0, 1)
    assert (u * u).is_zero()


def test_inner_product_example_1_1_third_coordinate():
    # y = (1,0) + u(0,1): <a + ub, y> = a1 + u(a2 + b1).
    y = RingVector.of(2, (1, 0), (0, 1))
    for a1 in range(2):
        for a2 in range(2):
            for b1 in range(2):
                for b2 in range(2):
                    x = RingVector.of(2, (a1, a2), (b1, b2))
                    e = inner_product(x, y)
                    assert (e.a, e.b) == (a1, (a2 + b1) % 2)


def test_inner_product_small_cases():
    x = RingVector.of(3, (1, 2), (0, 1))
    y = RingVector.of(3, (2, 0), (1, 1))
    e = inner_product(x, y)
    assert (e.a, e.b) == (2, 0)
    assert inner_product(x, RingVector.zero(3, 2)).is_zero()


def test_inner_product_mismatch():
    with pytest.raises(DimensionError):
        inner_product(RingVector.zero(3, 2), RingVector.zero(3, 3))


def test_gray_map_examples():
    assert gray_map(RingVector.zero(5, 3)).entries == (0,) * 6
    assert gray_map(RingVector.of(3, (1,), (2,))).entries == (2, 0)
    x = RingVector.of(5, (1, 2, 3), (4, 0, 1))
    assert gray_map(x).entries == (4, 0, 1, 0, 2, 4)


def test_lee_weight_examples():
    assert lee_weight(RingVector.zero(3, 4)) == 0
    assert lee_weight(RingVector.of(3, (1,), (2,))) == 1
    for p in (2, 3, 5, 7):
        assert lee_weight(RingVector.of(p, (0,), (1,))) == 2


@given(ring_pairs(), st.integers(0, 6))
def test_gray_map_is_fp_linear(pair, lam):
    x, y = pair
    assert gray_map(x + y) == gray_map(x) + gray_map(y)
    assert gray_map(x.scale(lam)) == gray_map(x).scale(lam)


@given(ring_pairs())
def test_gray_isometry(pair):
    x, y = pair
    assert lee_weight(x - y) == hamming_distance(gray_map(x), gray_map(y))


@given(ring_vectors())
def test_gray_bijective_and_weight(x):
    assert gray_inverse(gray_map(x)) == x
    assert (lee_weight(x) == 0) == x.is_zero()
    assert 0 <= lee_weight(x) <= 2 * len(x)


@given(ring_pairs())
def test_inner_product_matches_componentwise_ring_products(pair):
    x, y = pair
    total = RingElement(x.p, 0, 0)
    for xi, yi in zip(x, y):
        total = total + xi * yi
    assert inner_product(x, y) == total
