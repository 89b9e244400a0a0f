"""
Down sets of F_p^m under the componentwise order.

Coordinates are compared as the integers 0..p-1, so ``(1,2) <= (2,2)`` but
``(1,2)`` and ``(2,1)`` are incomparable.  A :class:`DownSet` is stored as
its antichain of maximal elements; everything else (membership, size,
enumeration) is derived from that antichain.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceeded, DimensionError, ParameterError
from .gf import FpVector, check_prime, space_array

# Largest p^m that enumerate() will walk.
ENUMERATION_BUDGET = 10**7


def leq(v: FpVector, w: FpVector) -> bool:
    """``v <= w`` iff v_i <= w_i for every coordinate."""
    v._check(w)
    return all(x <= y for x, y in zip(v.entries, w.entries))


def join_meet(v: FpVector, w: FpVector) -> tuple[FpVector, FpVector]:
    """Componentwise (max, min)."""
    v._check(w)
    join = tuple(max(x, y) for x, y in zip(v.entries, w.entries))
    meet = tuple(min(x, y) for x, y in zip(v.entries, w.entries))
    return FpVector(v.p, join), FpVector(v.p, meet)


def maximal_elements(vectors: Iterable[FpVector]) -> list[FpVector]:
    """Maximal elements of a finite set, in lexicographic order."""
    vs = sorted(set(vectors), key=lambda v: v.entries)
    out = []
    for v in vs:
        if not any(w != v and leq(v, w) for w in vs):
            out.append(v)
    return out


@dataclass(frozen=True)
class DownSet:
    """The down set generated by an antichain of maximal elements.

    Build instances through :func:`canonicalize` (or :meth:`generated_by`);
    the constructor trusts that ``generators`` is already a lex-sorted
    antichain.
    """

    p: int
    m: int
    generators: tuple[FpVector, ...]

    @classmethod
    def generated_by(cls, p: int, m: int, *generators: Sequence[int]) -> "DownSet":
        return canonicalize([FpVector(p, tuple(g)) for g in generators], p=p, m=m)

    @classmethod
    def empty(cls, p: int, m: int) -> "DownSet":
        return cls(check_prime(p), m, ())

    def _check(self, v: FpVector) -> None:
        if v.p != self.p or len(v) != self.m:
            raise DimensionError(
                f"vector in F_{v.p}^{len(v)} tested against a down set of F_{self.p}^{self.m}"
            )

    def __contains__(self, v: FpVector) -> bool:
        return contains(self, v)

    def __len__(self) -> int:
        return size(self)

    @property
    def is_empty(self) -> bool:
        return not self.generators

    def generator_array(self) -> np.ndarray:
        if not self.generators:
            return np.zeros((0, self.m), dtype=np.int64)
        return np.array([g.entries for g in self.generators], dtype=np.int64)

    def to_text(self) -> str:
        return format_downset(self)

    def __str__(self) -> str:
        inner = ", ".join(str(g) for g in self.generators)
        return f"<{inner}>"


def canonicalize(generators: Iterable[FpVector], p: int | None = None,
                 m: int | None = None) -> DownSet:
    """Reduce ``generators`` to the lex-sorted antichain of its maximal elements.

    ``p`` and ``m`` are needed only when ``generators`` is empty.
    """
    gens = list(generators)
    if gens:
        p0, m0 = gens[0].p, len(gens[0])
        for g in gens:
            if g.p != p0 or len(g) != m0:
                raise DimensionError("generators must share p and m")
        if (p is not None and p != p0) or (m is not None and m != m0):
            raise DimensionError(f"generators live in F_{p0}^{m0}, expected F_{p}^{m}")
        p, m = p0, m0
    elif p is None or m is None:
        raise ParameterError("p and m are required for an empty generator list")
    check_prime(p)
    if m < 1:
        raise ParameterError(f"dimension m must be >= 1, got {m}")
    return DownSet(p, m, tuple(maximal_elements(gens)))


def contains(delta: DownSet, v: FpVector) -> bool:
    delta._check(v)
    return any(leq(v, g) for g in delta.generators)


def size(delta: DownSet) -> int:
    """|Delta| by inclusion-exclusion over nonempty generator subsets.

    The intersection of the boxes below a family of generators is the box
    below their meet, which holds prod(1 + meet_i) vectors.
    """
    gens = delta.generator_array()
    t = len(gens)
    total = 0
    for k in range(1, t + 1):
        sign = 1 if k % 2 else -1
        for subset in combinations(range(t), k):
            meet = gens[list(subset)].min(axis=0)
            total += sign * int(np.prod(meet + 1, dtype=object))
    return total


def membership_mask(delta: DownSet, points: np.ndarray | None = None) -> np.ndarray:
    """Boolean mask over ``points`` (default: all of F_p^m in lex order)."""
    if points is None:
        _check_budget(delta.p, delta.m)
        points = space_array(delta.p, delta.m)
    mask = np.zeros(len(points), dtype=bool)
    for g in delta.generator_array():
        mask |= np.all(points <= g, axis=1)
    return mask


def _check_budget(p: int, m: int, budget: int = ENUMERATION_BUDGET) -> None:
    if p**m > budget:
        raise BudgetExceeded(f"enumerating F_{p}^{m}", p**m, budget)


def member_array(delta: DownSet) -> np.ndarray:
    """Members of Delta as a lex-ordered ``(|Delta|, m)`` array."""
    _check_budget(delta.p, delta.m)
    pts = space_array(delta.p, delta.m)
    return pts[membership_mask(delta, pts)]


def complement_array(delta: DownSet) -> np.ndarray:
    _check_budget(delta.p, delta.m)
    pts = space_array(delta.p, delta.m)
    return pts[~membership_mask(delta, pts)]


def enumerate_members(delta: DownSet) -> list[FpVector]:
    """Members of Delta in lexicographic order."""
    return [FpVector(delta.p, tuple(int(x) for x in row)) for row in member_array(delta)]


def complement_enumerate(delta: DownSet) -> list[FpVector]:
    """Members of F_p^m minus Delta in lexicographic order."""
    return [FpVector(delta.p, tuple(int(x) for x in row)) for row in complement_array(delta)]


def parse_downset(text: str, p: int, m: int | None = None) -> tuple[DownSet, list[FpVector]]:
    """Parse ``"2,1,0;1,2,0"`` into a canonical down set.

    Returns the down set together with the generators that were dropped as
    dominated or duplicated, so callers can warn about them.  An empty or
    blank string is the empty down set (``m`` required).
    """
    check_prime(p)
    text = text.strip()
    if not text:
        if m is None:
            raise ParameterError("empty generator list needs an explicit m")
        return DownSet.empty(p, m), []
    gens = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            coords = [int(c) for c in chunk.split(",")]
        except ValueError:
            raise ParameterError(f"bad generator {chunk!r}: expected comma-separated integers")
        if any(not 0 <= c < p for c in coords):
            raise ParameterError(f"generator {chunk!r} has coordinates outside 0..{p - 1}")
        gens.append(FpVector(p, tuple(coords)))
    if not gens:
        return parse_downset("", p, m)
    if m is not None and any(len(g) != m for g in gens):
        raise ParameterError(f"every generator must have {m} coordinates")
    delta = canonicalize(gens)
    kept = set(delta.generators)
    dropped = []
    for g in gens:
        if g in kept:
            kept.discard(g)
        else:
            dropped.append(g)
    return delta, dropped


def format_downset(delta: DownSet) -> str:
    return ";".join(",".join(map(str, g.entries)) for g in delta.generators)


def random_downset(rng: np.random.Generator, p: int, m: int, max_generators: int = 4,
                   min_generators: int = 2) -> DownSet:
    """A random down set with (before canonicalization) a few random generators."""
    t = int(rng.integers(min_generators, max_generators + 1))
    gens = [FpVector(p, tuple(int(x) for x in rng.integers(0, p, size=m))) for _ in range(t)]
    return canonicalize(gens)
