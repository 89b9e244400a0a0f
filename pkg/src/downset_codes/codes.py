"""
Codes C_L over F_p + uF_p built from down sets, and their Gray images.

A defining set here always has the shape ``L = B + uF_p^m`` for a base set
``B`` of F_p^m (the complement of a down set, the down set itself, or an
explicit list).  Coordinates are ordered with ``c`` in B as the outer loop
and ``d`` in F_p^m as the inner loop, both lexicographic.

The Gray image of a length-N codeword is laid out as N b-components followed
by N (a+b)-components.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping, Sequence

import numpy as np

from .bounds import OptimalityVerdict, distance_optimal_check
from .errors import BudgetExceeded, DimensionError, ParameterError
from .gf import check_prime, inverse, rank_mod_p, space_array
from .poset import DownSet, complement_array, member_array
from .ring import RingVector, inner_product, lee_weight

# Coordinate evaluations allowed for one brute-force run.
DEFAULT_BUDGET = 5 * 10**9
# Per-chunk working set (messages x coordinates) of the brute-force kernel.
_CHUNK_CELLS = 1 << 22

AT_LEAST_3 = 3


class Variant(str, Enum):
    COMPLEMENT = "complement"   # L = Delta^c + uF_p^m
    DIRECT = "direct"           # L = Delta + uF_p^m
    CUSTOM = "custom"           # explicit base set


@dataclass(frozen=True, eq=False)
class DefiningSet:
    p: int
    m: int
    base: np.ndarray
    variant: Variant
    down_set: DownSet | None = None

    def __post_init__(self):
        check_prime(self.p)
        base = np.asarray(self.base, dtype=np.int64).reshape(-1, self.m)
        base.setflags(write=False)
        object.__setattr__(self, "base", base)

    @classmethod
    def from_downset(cls, delta: DownSet, variant: Variant | str = Variant.COMPLEMENT
                     ) -> "DefiningSet":
        variant = Variant(variant)
        if variant is Variant.COMPLEMENT:
            base = complement_array(delta)
        elif variant is Variant.DIRECT:
            base = member_array(delta)
        else:
            raise ParameterError("a down set defines only the complement or direct variant")
        return cls(delta.p, delta.m, base, variant, delta)

    @classmethod
    def custom(cls, p: int, m: int, base: Sequence[Sequence[int]]) -> "DefiningSet":
        """``L = B + uF_p^m`` for an explicit base set ``B`` (kept in the given order)."""
        arr = np.array([list(b) for b in base], dtype=np.int64).reshape(-1, m)
        if arr.size and (arr.min() < 0 or arr.max() >= p):
            raise ParameterError(f"base vectors must have entries in 0..{p - 1}")
        return cls(p, m, arr, Variant.CUSTOM)

    @property
    def base_size(self) -> int:
        return len(self.base)

    def __len__(self) -> int:
        return self.base_size * self.p**self.m

    @property
    def gray_length(self) -> int:
        return 2 * len(self)

    def elements(self) -> Iterator[RingVector]:
        """The members c + ud of L in coordinate order."""
        fiber = space_array(self.p, self.m)
        for c in self.base:
            for d in fiber:
                yield RingVector(self.p, tuple(zip(c.tolist(), d.tolist())))


def _check_message(a: RingVector, L: DefiningSet) -> None:
    if a.p != L.p or len(a) != L.m:
        raise DimensionError(f"message in R^{len(a)} (p={a.p}) for a code over R^{L.m} (p={L.p})")


def codeword(a: RingVector, L: DefiningSet, budget: int = DEFAULT_BUDGET) -> RingVector:
    """c_L(a) = (<a, l>)_{l in L}, one ring inner product per coordinate."""
    _check_message(a, L)
    if len(L) > budget:
        raise BudgetExceeded("codeword emission", len(L), budget)
    pairs = []
    for l in L.elements():
        e = inner_product(a, l)
        pairs.append((e.a, e.b))
    return RingVector(L.p, tuple(pairs))


def iter_messages(p: int, m: int) -> Iterator[RingVector]:
    """All a = alpha + u beta in R^m, with (alpha, beta) in lexicographic order."""
    for row in space_array(p, 2 * m):
        yield RingVector(p, tuple(zip(row[:m].tolist(), row[m:].tolist())))


@dataclass(frozen=True)
class WeightDistribution:
    """Exact weight histogram, stored as sorted (weight, frequency) pairs."""

    p: int
    m: int
    entries: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, p: int, m: int, counts: Mapping[int, int] | np.ndarray
                    ) -> "WeightDistribution":
        if isinstance(counts, np.ndarray):
            nz = np.nonzero(counts)[0]
            items = [(int(w), int(counts[w])) for w in nz]
        else:
            items = [(int(w), int(f)) for w, f in counts.items() if f]
        for w, f in items:
            if f < 0:
                raise ParameterError(f"negative frequency {f} at weight {w}")
        return cls(p, m, tuple(sorted(items)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def to_pairs(self) -> list[list[int]]:
        return [[w, f] for w, f in self.entries]

    @property
    def total(self) -> int:
        return sum(f for _, f in self.entries)

    @property
    def nonzero_weights(self) -> list[int]:
        return [w for w, _ in self.entries if w > 0]

    @property
    def min_distance(self) -> int | None:
        ws = self.nonzero_weights
        return ws[0] if ws else None

    def first_moment(self) -> int:
        return sum(w * f for w, f in self.entries)

    def enumerator(self) -> str:
        """Weight enumerator as ``1+6z^810+...``, ascending in weight."""
        terms = []
        for w, f in self.entries:
            terms.append(str(f) if w == 0 else f"{f}z^{w}")
        return "+".join(terms)


def _message_digits(p: int, m: int, start: int, stop: int) -> tuple[np.ndarray, np.ndarray]:
    idx = np.arange(start, stop, dtype=np.int64)
    powers = p ** np.arange(2 * m - 1, -1, -1, dtype=np.int64)
    digits = (idx[:, None] // powers[None, :]) % p
    return digits[:, :m], digits[:, m:]


def _weights_range(p: int, m: int, base: np.ndarray, start: int, stop: int) -> np.ndarray:
    """Lee weights of c_L(a) for message indices in [start, stop).

    Every coordinate (c, d) of every codeword is evaluated:
    b = alpha.d + beta.c and a + b = alpha.c + beta.c + alpha.d.  Both
    partial sums are reduced mod p, so their total lies in [0, 2p-2] and is
    zero mod p iff it equals 0 or p.
    """
    fiber = space_array(p, m)
    n = len(base) * len(fiber)
    out = np.zeros(stop - start, dtype=np.int64)
    if n == 0:
        return out
    dtype = np.int16 if 2 * p < 2**15 else np.int64
    chunk = max(1, _CHUNK_CELLS // n)
    for lo in range(start, stop, chunk):
        hi = min(stop, lo + chunk)
        alpha, beta = _message_digits(p, m, lo, hi)
        ad = ((alpha @ fiber.T) % p).astype(dtype)
        bc = ((beta @ base.T) % p).astype(dtype)
        abc = ((alpha @ base.T + beta @ base.T) % p).astype(dtype)
        b = bc[:, :, None] + ad[:, None, :]
        s = abc[:, :, None] + ad[:, None, :]
        zeros = ((b == 0) | (b == p)).reshape(hi - lo, -1).sum(axis=1)
        zeros += ((s == 0) | (s == p)).reshape(hi - lo, -1).sum(axis=1)
        out[lo - start:hi - start] = 2 * n - zeros
    return out


def _histogram_range(p: int, m: int, base: np.ndarray, start: int, stop: int) -> np.ndarray:
    n = len(base) * p**m
    return np.bincount(_weights_range(p, m, base, start, stop), minlength=2 * n + 1)


def message_weights(L: DefiningSet, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Lee weight of every codeword, indexed like :func:`iter_messages`."""
    cost = brute_force_cost(L)
    if cost > budget:
        raise BudgetExceeded("per-message weights", cost, budget)
    return _weights_range(L.p, L.m, np.array(L.base), 0, L.p ** (2 * L.m))


def brute_force_cost(L: DefiningSet) -> int:
    return L.p ** (2 * L.m) * len(L)


def brute_force_distribution(L: DefiningSet, budget: int = DEFAULT_BUDGET,
                             workers: int = 1, partitions: int | None = None
                             ) -> WeightDistribution:
    """Exact Lee weight histogram of C_L by evaluating every codeword.

    Messages are split into ``partitions`` contiguous ranges (default: one
    per worker) whose histograms are summed; the result does not depend on
    the split.
    """
    cost = brute_force_cost(L)
    if cost > budget:
        raise BudgetExceeded(
            f"brute force over {L.p ** (2 * L.m)} messages x {len(L)} coordinates", cost, budget)
    total = L.p ** (2 * L.m)
    parts = max(1, partitions or workers)
    bounds = [total * i // parts for i in range(parts + 1)]
    ranges = [(bounds[i], bounds[i + 1]) for i in range(parts) if bounds[i] < bounds[i + 1]]
    args = [(L.p, L.m, np.array(L.base), lo, hi) for lo, hi in ranges]
    if workers > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hists = list(pool.map(_histogram_range, *zip(*args)))
    else:
        hists = [_histogram_range(*a) for a in args]
    return WeightDistribution.from_counts(L.p, L.m, sum(hists))


def naive_distribution(L: DefiningSet, budget: int = 10**6) -> WeightDistribution:
    """Same histogram as :func:`brute_force_distribution`, through the pure ring
    arithmetic of :func:`codeword`.  Only for tiny codes."""
    cost = brute_force_cost(L)
    if cost > budget:
        raise BudgetExceeded("pure-Python enumeration", cost, budget)
    counts: dict[int, int] = {}
    for a in iter_messages(L.p, L.m):
        w = lee_weight(codeword(a, L))
        counts[w] = counts.get(w, 0) + 1
    return WeightDistribution.from_counts(L.p, L.m, counts)


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    """Generator matrix of the Gray image; rows are phi(c_L(e_i)) then phi(c_L(u e_i))."""

    p: int
    m: int
    matrix: np.ndarray
    column_order: str = "gray-blocks:b,a+b;base-lex-outer;fiber-lex-inner"

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]

    def distinct_columns(self) -> np.ndarray:
        """Normalised nonzero columns with duplicates removed (for rank and proportionality)."""
        keys, normed = _normalized_column_keys(self.matrix, self.p)
        nz = keys >= 0
        _, first = np.unique(keys[nz], return_index=True)
        return normed[:, nz][:, first]

    def rank(self) -> int:
        return rank_mod_p(self.distinct_columns(), self.p)

    def row_space(self, limit: int = 10**6) -> set[tuple[int, ...]]:
        """All F_p-combinations of the rows (small matrices only)."""
        count = self.p ** self.rows
        if count * self.cols > limit * 64:
            raise BudgetExceeded("row space enumeration", count * self.cols, limit * 64)
        coeffs = space_array(self.p, self.rows)
        words = (coeffs @ self.matrix.astype(np.int64)) % self.p
        return {tuple(int(x) for x in w) for w in words}

    def to_text(self) -> str:
        lines = [f"{self.p} {self.m} {self.rows} {self.cols}"]
        for row in self.matrix:
            lines.append(" ".join(str(int(x)) for x in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "GeneratorMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        p, m, rows, cols = (int(x) for x in lines[0].split())
        body = [[int(x) for x in ln.split()] for ln in lines[1:]]
        mat = np.array(body, dtype=np.int64).reshape(rows, cols)
        return cls(p, m, mat)


def gray_generator_matrix(L: DefiningSet, budget: int = DEFAULT_BUDGET) -> GeneratorMatrix:
    """The 2m x 2|L| generator matrix of phi(C_L).

    Column (c, d) of the b-block is (d; c) and of the (a+b)-block is
    (c + d; c): row i < m is the image of the message e_i, row m + i the
    image of u*e_i.
    """
    p, m = L.p, L.m
    n = len(L)
    cost = 2 * m * 2 * n
    if cost > budget:
        raise BudgetExceeded("generator matrix", cost, budget)
    dtype = np.int8 if p < 128 else np.int64
    fiber = space_array(p, m).astype(dtype)
    base = L.base.astype(dtype)
    nb, nf = len(base), len(fiber)
    c_cols = np.repeat(base, nf, axis=0).T        # m x n
    d_cols = np.tile(fiber, (nb, 1)).T             # m x n
    mat = np.empty((2 * m, 2 * n), dtype=dtype)
    mat[:m, :n] = d_cols
    mat[m:, :n] = c_cols
    wide = np.int16 if p < 128 else np.int64
    mat[:m, n:] = (c_cols.astype(wide) + d_cols) % p
    mat[m:, n:] = c_cols
    return GeneratorMatrix(p, m, mat)


def _normalized_column_keys(matrix: np.ndarray, p: int,
                            chunk: int = 1 << 20) -> tuple[np.ndarray, np.ndarray]:
    """Scale each column so its first nonzero entry is 1, and key it as a base-p integer.

    Zero columns get key -1.  Two nonzero columns are proportional iff their
    keys coincide.  Columns are processed in chunks to bound memory.
    """
    rows, cols = matrix.shape
    if rows * np.log2(max(p, 2)) >= 62:
        raise ParameterError(f"{rows} rows over F_{p} do not fit a 64-bit column key")
    inv_table = np.array([0] + [inverse(x, p) for x in range(1, p)], dtype=np.int64)
    weights = p ** np.arange(rows - 1, -1, -1, dtype=np.int64)
    keys = np.empty(cols, dtype=np.int64)
    normed = np.empty(matrix.shape, dtype=matrix.dtype)
    for lo in range(0, cols, chunk):
        mat = np.asarray(matrix[:, lo:lo + chunk], dtype=np.int64) % p
        nonzero = mat != 0
        has = nonzero.any(axis=0)
        lead = mat[np.argmax(nonzero, axis=0), np.arange(mat.shape[1])]
        block = (mat * inv_table[lead][None, :]) % p
        normed[:, lo:lo + chunk] = block
        keys[lo:lo + chunk] = np.where(has, weights @ block, -1)
    return keys, normed


def has_zero_gray_column(L: DefiningSet) -> bool:
    """Whether phi(C_L) has an identically zero coordinate.

    Columns are (d; c) and (c + d; c), so one vanishes iff c = d = 0, i.e.
    iff the base set contains the zero vector.
    """
    return bool(len(L.base) and (~L.base.any(axis=1)).any())


def dual_distance_class(G: GeneratorMatrix) -> int:
    """Minimum distance of the dual of the row space, classified as 1, 2 or 3 (= at least 3).

    A weight-1 dual word exists iff some column is zero; a weight-2 one iff
    two columns are proportional.
    """
    if G.cols == 0:
        return AT_LEAST_3
    keys, _ = _normalized_column_keys(G.matrix, G.p)
    if (keys < 0).any():
        return 1
    if len(np.unique(keys)) < len(keys):
        return 2
    return AT_LEAST_3


def dual_class_label(cls: int) -> str:
    return ">=3" if cls >= AT_LEAST_3 else str(cls)


@dataclass
class CodeReport:
    """Parameters and verdicts for the Gray image phi(C_L)."""

    p: int
    m: int
    generators: str
    variant: str
    length_ring: int
    n: int
    k: int
    size: int
    d: int | None
    distribution: WeightDistribution
    dual_distance_class: int
    verdict: OptimalityVerdict | None
    rank: int
    diagnostics: list[str] = field(default_factory=list)

    @property
    def injective(self) -> bool:
        return self.rank == 2 * self.m

    def label(self) -> str:
        if self.verdict is None:
            return "degenerate"
        return self.verdict.label()

    def to_json_dict(self) -> dict:
        v = self.verdict
        return {
            "p": self.p,
            "m": self.m,
            "generators": self.generators,
            "variant": self.variant,
            "length_ring": self.length_ring,
            "n": self.n,
            "k": self.k,
            "size": self.size,
            "d": self.d,
            "distribution": self.distribution.to_pairs(),
            "dual_distance_class": dual_class_label(self.dual_distance_class),
            "griesmer_sum_d": v.griesmer_sum_d if v else None,
            "griesmer_sum_d_plus_1": v.griesmer_sum_d_plus_1 if v else None,
            "meets_griesmer": v.meets_griesmer if v else False,
            "distance_optimal": v.distance_optimal.value if v else None,
            "diagnostics": list(self.diagnostics),
        }


def build_report(L: DefiningSet, distribution: WeightDistribution,
                 diagnostics: Sequence[str] = (), budget: int = DEFAULT_BUDGET,
                 generators: str = "") -> CodeReport:
    """Assemble a :class:`CodeReport` from a computed distribution."""
    diags = list(diagnostics)
    G = gray_generator_matrix(L, budget)
    rank = G.rank()
    dual = dual_distance_class(G)
    p, m = L.p, L.m
    if rank < 2 * m:
        diags.append(f"a -> c_L(a) is not injective: generator matrix rank {rank} < {2 * m}")
    if distribution.total != p ** (2 * m):
        diags.append(f"distribution totals {distribution.total}, expected {p ** (2 * m)}")
    zero_freq = distribution.as_dict().get(0, 0)
    if zero_freq != p ** (2 * m - rank):
        diags.append(f"weight 0 has frequency {zero_freq}, expected {p ** (2 * m - rank)}")
    d = distribution.min_distance
    n = L.gray_length
    verdict = distance_optimal_check(n, rank, d, p) if d is not None and rank >= 1 else None
    if L.down_set is not None and not generators:
        generators = L.down_set.to_text()
    return CodeReport(
        p=p, m=m, generators=generators, variant=L.variant.value,
        length_ring=len(L), n=n, k=rank, size=p**rank, d=d,
        distribution=distribution, dual_distance_class=dual,
        verdict=verdict, rank=rank, diagnostics=diags,
    )


def example_1_1() -> DefiningSet:
    """The binary code with L = {(1,0)} + uF_2^2 (coordinates in lex order of d)."""
    return DefiningSet.custom(2, 2, [(1, 0)])

