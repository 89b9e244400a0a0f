import numpy as np
import pytest
from hypothesis import given, strategies as st

from downset_codes.errors import DimensionError, ParameterError
from downset_codes.gf import (
    FpVector, check_prime, dot, hamming_weight, rank_mod_p, require_odd, space_array,
)

from conftest import fp_vectors


def V(p, *xs):
    return FpVector(p, xs)


@pytest.mark.parametrize("v, expected", [
    (V(3, 0, 0, 0), 0),
    (V(3, 1, 0, 2), 2),
    (V(5, 4, 4, 4, 4), 4),
])
def test_hamming_weight(v, expected):
    assert hamming_weight(v) == expected


@pytest.mark.parametrize("v, w, expected", [
    (V(3, 1, 2), V(3, 2, 1), 1),
    (V(5, 1, 1, 1), V(5, 2, 3, 4), 4),
    (V(7, 3, 6, 2), V(7, 0, 0, 0), 0),
])
def test_dot(v, w, expected):
    assert dot(v, w) == expected


def test_dot_mismatch():
    with pytest.raises(DimensionError):
        dot(V(3, 1, 2), V(3, 1, 2, 0))
    with pytest.raises(DimensionError):
        dot(V(3, 1, 2), V(5, 1, 2))


@pytest.mark.parametrize("p", [0, 1, 4, 9, 15, 91])
def test_non_primes_rejected(p):
    with pytest.raises(ParameterError):
        check_prime(p)


def test_primes_accepted_and_odd_guard():
    for p in (2, 3, 5, 7, 11, 101):
        assert check_prime(p) == p
    with pytest.raises(ParameterError, match="odd"):
        require_odd(2)


def test_entries_must_be_canonical():
    with pytest.raises(ParameterError):
        FpVector(3, (0, 3))
    assert FpVector.of(3, (4, -1)).entries == (1, 2)


def test_space_array_is_lex():
    arr = space_array(3, 2)
    assert arr.tolist() == [[a, b] for a in range(3) for b in range(3)]


def test_rank_mod_p():
    assert rank_mod_p(np.array([[1, 2], [2, 4]]), 3) == 1
    assert rank_mod_p(np.array([[1, 2], [2, 1]]), 3) == 1   # second row = 2 * first mod 3
    assert rank_mod_p(np.array([[1, 2], [2, 1]]), 5) == 2
    assert rank_mod_p(np.eye(4, dtype=int), 7) == 4


@st.composite
def triples(draw):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    m = draw(st.integers(1, 6))
    return [draw(fp_vectors(p, m)) for _ in range(3)]


@given(triples(), st.integers(0, 10))
def test_dot_bilinear_and_symmetric(vs, lam):
    v, w, x = vs
    p = v.p
    assert dot(v, w) == dot(w, v)
    assert dot(v, w + x) == (dot(v, w) + dot(v, x)) % p
    assert dot(v.scale(lam), w) == (lam * dot(v, w)) % p


@given(fp_vectors())
def test_weight_zero_iff_zero_vector(v):
    assert (hamming_weight(v) == 0) == v.is_zero()
    assert 0 <= hamming_weight(v) <= len(v)
