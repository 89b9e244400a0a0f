"""
Griesmer and sphere-packing bounds, and the optimality verdicts built on them.

Everything is exact integer arithmetic; no verdict ever goes through a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .errors import ParameterError
from .gf import check_prime


class Optimality(str, Enum):
    PROVEN = "PROVEN"
    UNDETERMINED = "UNDETERMINED"


@dataclass(frozen=True)
class OptimalityVerdict:
    meets_griesmer: bool
    distance_optimal: Optimality
    griesmer_sum_d: int
    griesmer_sum_d_plus_1: int

    def label(self) -> str:
        """``Optimal*`` for Griesmer codes, else ``Distance optimal`` / ``Undetermined``."""
        if self.meets_griesmer:
            return "Optimal*"
        if self.distance_optimal is Optimality.PROVEN:
            return "Distance optimal"
        return "Undetermined"


def _check(k: int, d: int, p: int) -> None:
    check_prime(p)
    if k < 1 or d < 1:
        raise ParameterError(f"need k >= 1 and d >= 1, got k={k}, d={d}")


def griesmer_sum(k: int, d: int, p: int) -> int:
    """sum_{i<k} ceil(d / p^i), the least length of any [n, k, d] code over F_p."""
    _check(k, d, p)
    total = 0
    q = 1
    for _ in range(k):
        total += -(-d // q)
        q *= p
    return total


def meets_griesmer(n: int, k: int, d: int, p: int) -> bool:
    return n == griesmer_sum(k, d, p)


def distance_optimal_check(n: int, k: int, d: int, p: int) -> OptimalityVerdict:
    """Distance optimality is PROVEN when no [n, k, d+1] code can satisfy Griesmer.

    The criterion is sufficient only; failing it yields UNDETERMINED, never
    a claim of non-optimality.
    """
    g_d = griesmer_sum(k, d, p)
    g_next = griesmer_sum(k, d + 1, p)
    proven = g_next > n
    return OptimalityVerdict(
        meets_griesmer=(n == g_d),
        distance_optimal=Optimality.PROVEN if proven else Optimality.UNDETERMINED,
        griesmer_sum_d=g_d,
        griesmer_sum_d_plus_1=g_next,
    )


def sphere_packing_ok(n: int, k: int, d: int, p: int) -> bool:
    """Whether p^k * |Hamming ball of radius floor((d-1)/2)| <= p^n.

    The ball volume is accumulated term by term and the loop stops as soon
    as the left side exceeds p^n, so refutations are cheap even for huge n.
    """
    _check(k, d, p)
    if n < 0 or k > n:
        return False
    t = (d - 1) // 2
    limit = p ** (n - k)
    volume = 0
    term = 1  # C(n, i) (p-1)^i
    for i in range(min(t, n) + 1):
        if i:
            term = term * (n - i + 1) * (p - 1) // i
        volume += term
        if volume > limit:
            return False
    return True


def ball_volume(n: int, radius: int, p: int) -> int:
    return sum(comb(n, i) * (p - 1) ** i for i in range(min(radius, n) + 1))
