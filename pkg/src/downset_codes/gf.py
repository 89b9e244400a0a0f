"""
Arithmetic in the prime field F_p and on vectors over it.

Field elements are canonical residues 0..p-1 held in plain ints.  Vectors
are immutable tuples wrapped in :class:`FpVector`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionError, ParameterError

# p*p must stay inside a signed 64-bit word.
MAX_PRIME = 3037000493


@lru_cache(maxsize=None)
def check_prime(p: int) -> int:
    """Return ``p`` if it is a prime usable as a modulus, else raise."""
    if not isinstance(p, (int, np.integer)) or isinstance(p, bool):
        raise ParameterError(f"modulus must be an integer, got {p!r}")
    p = int(p)
    if p < 2:
        raise ParameterError(f"modulus must be a prime >= 2, got {p}")
    if p > MAX_PRIME:
        raise ParameterError(f"modulus {p} too large: p^2 must fit a machine word")
    i = 2
    while i * i <= p:
        if p % i == 0:
            raise ParameterError(f"{p} is not prime (divisible by {i})")
        i += 1
    return p


def require_odd(p: int, what: str = "analytic formulas") -> int:
    check_prime(p)
    if p == 2:
        raise ParameterError(f"{what} require an odd prime p (got p=2)")
    return p


def inverse(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ZeroDivisionError("0 has no inverse mod p")
    return pow(x, -1, p)


@dataclass(frozen=True)
class FpVector:
    """A length-m vector over F_p with entries in 0..p-1."""

    p: int
    entries: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        entries = tuple(int(e) for e in self.entries)
        for e in entries:
            if not 0 <= e < self.p:
                raise ParameterError(f"entry {e} not a canonical residue mod {self.p}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, p: int, values: Iterable[int]) -> "FpVector":
        """Build a vector, reducing arbitrary integers mod p."""
        return cls(p, tuple(int(v) % p for v in values))

    @classmethod
    def zero(cls, p: int, m: int) -> "FpVector":
        return cls(p, (0,) * m)

    @classmethod
    def unit(cls, p: int, m: int, i: int) -> "FpVector":
        return cls(p, tuple(1 if j == i else 0 for j in range(m)))

    @property
    def m(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def _check(self, other: "FpVector") -> None:
        if not isinstance(other, FpVector):
            raise TypeError(f"expected FpVector, got {type(other).__name__}")
        if other.p != self.p or len(other) != len(self):
            raise DimensionError(
                f"mismatched operands: F_{self.p}^{len(self)} vs F_{other.p}^{len(other)}"
            )

    def __add__(self, other: "FpVector") -> "FpVector":
        self._check(other)
        p = self.p
        return FpVector(p, tuple((x + y) % p for x, y in zip(self, other)))

    def __sub__(self, other: "FpVector") -> "FpVector":
        self._check(other)
        p = self.p
        return FpVector(p, tuple((x - y) % p for x, y in zip(self, other)))

    def __neg__(self) -> "FpVector":
        return FpVector(self.p, tuple((-x) % self.p for x in self))

    def scale(self, lam: int) -> "FpVector":
        return FpVector(self.p, tuple((lam * x) % self.p for x in self))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def hamming_weight(v: FpVector) -> int:
    """Number of nonzero coordinates."""
    return sum(1 for x in v.entries if x)


def hamming_distance(v: FpVector, w: FpVector) -> int:
    v._check(w)
    return sum(1 for x, y in zip(v, w) if x != y)


def dot(v: FpVector, w: FpVector) -> int:
    """Standard bilinear form sum(v_i * w_i) mod p."""
    v._check(w)
    return sum(x * y for x, y in zip(v.entries, w.entries)) % v.p


def concat(*vectors: FpVector) -> FpVector:
    p = vectors[0].p
    if any(v.p != p for v in vectors):
        raise DimensionError("cannot concatenate vectors over different fields")
    return FpVector(p, tuple(x for v in vectors for x in v.entries))


def iter_space(p: int, m: int) -> Iterator[FpVector]:
    """All of F_p^m in lexicographic order."""
    for t in product(range(p), repeat=m):
        yield FpVector(p, t)


def space_array(p: int, m: int) -> np.ndarray:
    """All of F_p^m as a ``(p**m, m)`` int64 array, rows in lexicographic order."""
    if m == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices((p,) * m, dtype=np.int64)
    return grid.reshape(m, -1).T.copy()


def as_array(vectors: Sequence[FpVector], m: int) -> np.ndarray:
    if not vectors:
        return np.zeros((0, m), dtype=np.int64)
    return np.array([v.entries for v in vectors], dtype=np.int64)


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank over F_p by row reduction.  Works on a copy."""
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivots = np.nonzero(a[rank:, col])[0]
        if pivots.size == 0:
            continue
        piv = rank + pivots[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        a[rank] = (a[rank] * inverse(int(a[rank, col]), p)) % p
        others = np.nonzero(a[:, col])[0]
        for r in others:
            if r != rank:
                a[r] = (a[r] - a[r, col] * a[rank]) % p
        rank += 1
    return rank
