"""
The chain ring R = F_p + uF_p with u^2 = 0.

An element a + ub is stored as the residue pair (a, b).  The Gray map sends
a + ub to (b, a + b); on vectors the image is laid out as the b-block
followed by the (a+b)-block, and Lee weight is the Hamming weight of that
image.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DimensionError, ParameterError
from .gf import FpVector, check_prime, hamming_distance, hamming_weight


@dataclass(frozen=True)
class RingElement:
    p: int
    a: int
    b: int

    def __post_init__(self):
        check_prime(self.p)
        if not (0 <= self.a < self.p and 0 <= self.b < self.p):
            raise ParameterError(f"({self.a},{self.b}) not canonical mod {self.p}")

    @classmethod
    def of(cls, p: int, a: int, b: int) -> "RingElement":
        return cls(p, a % p, b % p)

    def _check(self, other: "RingElement") -> None:
        if other.p != self.p:
            raise DimensionError(f"mixing F_{self.p}+uF_{self.p} with p={other.p}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement.of(self.p, self.a + other.a, self.b + other.b)

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement.of(self.p, self.a - other.a, self.b - other.b)

    def __neg__(self) -> "RingElement":
        return RingElement.of(self.p, -self.a, -self.b)

    def __mul__(self, other: "RingElement") -> "RingElement":
        # (a+ub)(c+ud) = ac + u(ad + bc); the u^2 term vanishes.
        self._check(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        return RingElement.of(self.p, a * c, a * d + b * c)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        return f"{self.a}+{self.b}u"


@dataclass(frozen=True)
class RingVector:
    """A vector alpha + u*beta in R^m, stored as per-coordinate (a, b) pairs."""

    p: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        check_prime(self.p)
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        for a, b in pairs:
            if not (0 <= a < self.p and 0 <= b < self.p):
                raise ParameterError(f"({a},{b}) not canonical mod {self.p}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_parts(cls, alpha: FpVector, beta: FpVector) -> "RingVector":
        alpha._check(beta)
        return cls(alpha.p, tuple(zip(alpha.entries, beta.entries)))

    @classmethod
    def of(cls, p: int, a: Iterable[int], b: Iterable[int]) -> "RingVector":
        return cls.from_parts(FpVector.of(p, a), FpVector.of(p, b))

    @classmethod
    def from_elements(cls, elements: Iterable[RingElement]) -> "RingVector":
        elements = list(elements)
        p = elements[0].p
        return cls(p, tuple((e.a, e.b) for e in elements))

    @classmethod
    def zero(cls, p: int, m: int) -> "RingVector":
        return cls(p, ((0, 0),) * m)

    @property
    def m(self) -> int:
        return len(self.pairs)

    @property
    def alpha(self) -> FpVector:
        return FpVector(self.p, tuple(a for a, _ in self.pairs))

    @property
    def beta(self) -> FpVector:
        return FpVector(self.p, tuple(b for _, b in self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[RingElement]:
        for a, b in self.pairs:
            yield RingElement(self.p, a, b)

    def __getitem__(self, i: int) -> RingElement:
        a, b = self.pairs[i]
        return RingElement(self.p, a, b)

    def _check(self, other: "RingVector") -> None:
        if other.p != self.p or len(other) != len(self):
            raise DimensionError(
                f"mismatched operands: R^{len(self)} (p={self.p}) vs R^{len(other)} (p={other.p})"
            )

    def __add__(self, other: "RingVector") -> "RingVector":
        self._check(other)
        p = self.p
        return RingVector(p, tuple(((a + c) % p, (b + d) % p)
                                   for (a, b), (c, d) in zip(self.pairs, other.pairs)))

    def __sub__(self, other: "RingVector") -> "RingVector":
        self._check(other)
        p = self.p
        return RingVector(p, tuple(((a - c) % p, (b - d) % p)
                                   for (a, b), (c, d) in zip(self.pairs, other.pairs)))

    def scale(self, lam: int) -> "RingVector":
        """Multiply by a scalar of F_p (embedded as lam + u0)."""
        p = self.p
        return RingVector(p, tuple(((lam * a) % p, (lam * b) % p) for a, b in self.pairs))

    def times_u(self) -> "RingVector":
        """u * (alpha + u beta) = u alpha."""
        return RingVector(self.p, tuple((0, a) for a, _ in self.pairs))

    def is_zero(self) -> bool:
        return all(a == 0 and b == 0 for a, b in self.pairs)

    def __str__(self) -> str:
        return "[" + ", ".join(f"{a}+{b}u" for a, b in self.pairs) + "]"


def inner_product(x: RingVector, y: RingVector) -> RingElement:
    """<x, y> = a.c + u(a.d + b.c) for x = a + ub, y = c + ud."""
    x._check(y)
    p = x.p
    ac = 0
    mixed = 0
    for (a, b), (c, d) in zip(x.pairs, y.pairs):
        ac += a * c
        mixed += a * d + b * c
    return RingElement(p, ac % p, mixed % p)


def gray_map(x: RingVector) -> FpVector:
    """(b_1..b_m, a_1+b_1..a_m+b_m) over F_p, length 2m."""
    p = x.p
    bs = tuple(b for _, b in x.pairs)
    sums = tuple((a + b) % p for a, b in x.pairs)
    return FpVector(p, bs + sums)


def gray_inverse(v: FpVector) -> RingVector:
    if len(v) % 2:
        raise DimensionError("Gray images have even length")
    m = len(v) // 2
    p = v.p
    bs = v.entries[:m]
    sums = v.entries[m:]
    return RingVector(p, tuple(((s - b) % p, b) for b, s in zip(bs, sums)))


def lee_weight(x: RingVector) -> int:
    """Hamming weight of the Gray image: w_H(b) + w_H(a + b)."""
    return hamming_weight(gray_map(x))


def lee_distance(x: RingVector, y: RingVector) -> int:
    return lee_weight(x - y)


def gray_distance(x: RingVector, y: RingVector) -> int:
    """Hamming distance between Gray images; equals :func:`lee_distance`."""
    return hamming_distance(gray_map(x), gray_map(y))

