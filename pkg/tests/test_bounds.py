from math import comb

from hypothesis import given, strategies as st

from downset_codes.bounds import (
    Optimality, ball_volume, distance_optimal_check, griesmer_sum, meets_griesmer,
    sphere_packing_ok,
)


def test_griesmer_examples():
    assert griesmer_sum(6, 900, 3) == 900 + 300 + 100 + 34 + 12 + 4 == 1350
    assert griesmer_sum(1, 17, 5) == 17
    assert griesmer_sum(6, 649, 3) == 976


def test_meets_griesmer_examples():
    assert meets_griesmer(1350, 6, 900, 3)
    assert not meets_griesmer(972, 6, 648, 3)
    assert griesmer_sum(6, 648, 3) == 971
    assert meets_griesmer(1134, 6, 756, 3)


def test_distance_optimal_examples():
    v = distance_optimal_check(972, 6, 648, 3)
    assert v.distance_optimal is Optimality.PROVEN and not v.meets_griesmer
    assert v.griesmer_sum_d_plus_1 == 976
    v = distance_optimal_check(1350, 6, 900, 3)
    assert v.distance_optimal is Optimality.PROVEN and v.meets_griesmer
    assert v.label() == "Optimal*"
    v = distance_optimal_check(976, 6, 648, 3)
    assert v.distance_optimal is Optimality.UNDETERMINED
    assert v.label() == "Undetermined"


def test_sphere_packing_examples():
    assert sphere_packing_ok(10, 4, 1, 3)
    assert sphere_packing_ok(10, 4, 2, 3)
    assert sphere_packing_ok(3, 1, 3, 2)        # binary repetition code is perfect
    assert sphere_packing_ok(7, 4, 3, 2)        # Hamming [7,4,3]
    assert not sphere_packing_ok(7, 5, 3, 2)
    # A dual of the p=3, m=3, r=2 family-1 Gray image with d >= 3 cannot exist.
    n = 2 * 27 * 24
    assert n == 1296
    assert not sphere_packing_ok(n, n - 6, 3, 3)
    assert 1 + 2 * n * (3 - 1) > 3**6


@given(st.integers(1, 60), st.integers(1, 60), st.integers(0, 30), st.sampled_from([2, 3, 5]))
def test_sphere_packing_matches_direct_formula(n, k, t, p):
    d = 2 * t + 1
    expected = k <= n and p**k * ball_volume(n, t, p) <= p**n
    assert sphere_packing_ok(n, k, d, p) == expected
    assert ball_volume(n, t, p) == sum(comb(n, i) * (p - 1) ** i for i in range(min(t, n) + 1))


@given(st.integers(1, 10), st.integers(1, 5000), st.sampled_from([2, 3, 5, 7]))
def test_griesmer_monotone(k, d, p):
    g = griesmer_sum(k, d, p)
    assert griesmer_sum(k, d + 1, p) >= g
    assert griesmer_sum(k + 1, d, p) >= g


@given(st.integers(1, 8), st.integers(1, 3000), st.integers(0, 40), st.sampled_from([2, 3, 5, 7]))
def test_griesmer_codes_are_distance_optimal(k, d, slack, p):
    n = griesmer_sum(k, d, p)
    assert distance_optimal_check(n, k, d, p).distance_optimal is Optimality.PROVEN
    v = distance_optimal_check(n + slack, k, d, p)
    if v.meets_griesmer:
        assert v.distance_optimal is Optimality.PROVEN
