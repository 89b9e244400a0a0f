"""
Command-line front end.

    downset-codes analyze --p 3 --m 3 --gens "1,1,0" --method auto
    downset-codes verify  --family 4 --p 5 --m 3 --r 1..3
    downset-codes table5  --p 3 --m 3,4 --format csv

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .analytic import (
    FamilySpec,
    TableError,
    distribution_analytic,
    recognize_family,
    table5,
    table_distribution,
)
from .codes import (
    DEFAULT_BUDGET,
    CodeReport,
    DefiningSet,
    Variant,
    WeightDistribution,
    brute_force_cost,
    brute_force_distribution,
    build_report,
    dual_class_label,
    gray_generator_matrix,
)
from .errors import BudgetExceeded, ParameterError
from .gf import check_prime
from .poset import DownSet, parse_downset, random_downset

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

METHODS = ("brute", "analytic", "table", "auto")


@dataclass
class RunConfig:
    p: int
    m: int | None
    gens: str | None
    variant: Variant = Variant.COMPLEMENT
    method: str = "auto"
    budget: int = DEFAULT_BUDGET
    fmt: str = "json"
    out: str | None = None
    family: int | None = None
    r: str | None = None
    seed: int = 0
    workers: int = 1
    extra: dict = field(default_factory=dict)


def parse_range(text: str) -> list[int]:
    """``"3"`` -> [3]; ``"1..4"`` -> [1, 2, 3, 4]; ``"1,3"`` -> [1, 3]."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo_i, hi_i = int(lo), int(hi)
                if hi_i < lo_i:
                    raise ParameterError(f"empty range {part!r}")
                out.extend(range(lo_i, hi_i + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise ParameterError(f"bad integer range {text!r}")
    if not out:
        raise ParameterError(f"empty range {text!r}")
    return out


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


# -- analyze ---------------------------------------------------------------

def _resolve_downset(cfg: RunConfig) -> tuple[DownSet, list[str]]:
    diags: list[str] = []
    if cfg.gens is not None:
        delta, dropped = parse_downset(cfg.gens, cfg.p, cfg.m)
        for g in dropped:
            msg = f"dropped dominated or duplicate generator {g}"
            _warn(msg)
            diags.append(msg)
        if cfg.m is not None and delta.m != cfg.m:
            raise ParameterError(f"generators have {delta.m} coordinates but --m is {cfg.m}")
        return delta, diags
    if cfg.family is not None and cfg.r is not None and cfg.m is not None:
        rs = parse_range(cfg.r)
        if len(rs) != 1:
            raise ParameterError("analyze takes a single --r value")
        return FamilySpec(cfg.family, cfg.p, cfg.m, rs[0]).down_set(), diags
    raise ParameterError("give --gens (with --m for an empty down set) or --family/--m/--r")


def _compare(name_a: str, a: WeightDistribution, name_b: str, b: WeightDistribution) -> str | None:
    if a == b:
        return None
    return f"{name_a} {a.to_pairs()} != {name_b} {b.to_pairs()}"


def run_analysis(cfg: RunConfig) -> tuple[CodeReport, list[str]]:
    """Compute the report for ``cfg``; returns it with a list of mismatch messages."""
    check_prime(cfg.p)
    if cfg.method not in METHODS:
        raise ParameterError(f"unknown method {cfg.method!r}")
    delta, diags = _resolve_downset(cfg)
    variant = Variant(cfg.variant)
    L = DefiningSet.from_downset(delta, variant)
    mismatches: list[str] = []

    if cfg.method == "brute":
        dist = brute_force_distribution(L, cfg.budget, workers=cfg.workers)
        diags.append("method: brute force")
    elif cfg.method == "analytic":
        dist = distribution_analytic(delta, variant, cfg.budget)
        diags.append("method: analytic")
    elif cfg.method == "table":
        spec = recognize_family(delta) if variant is Variant.COMPLEMENT else None
        if spec is None:
            raise ParameterError("method=table needs a single-generator down set of a known "
                                 "family with the complement variant")
        dist = table_distribution(spec)
        diags.append(f"method: table (family {spec.family}, r={spec.r})")
    else:
        if cfg.p == 2:
            dist = brute_force_distribution(L, cfg.budget, workers=cfg.workers)
            diags.append("method: brute force (analytic formulas need odd p)")
        else:
            dist = distribution_analytic(delta, variant, cfg.budget)
            used = ["analytic"]
            if brute_force_cost(L) <= cfg.budget:
                brute = brute_force_distribution(L, cfg.budget, workers=cfg.workers)
                used.append("brute force")
                msg = _compare("analytic", dist, "brute force", brute)
                if msg:
                    mismatches.append(msg)
            else:
                diags.append(f"brute-force cross-check skipped: cost {brute_force_cost(L)} "
                             f"exceeds budget {cfg.budget}")
            spec = recognize_family(delta) if variant is Variant.COMPLEMENT else None
            if spec is not None:
                try:
                    tab = table_distribution(spec)
                    used.append(f"table (family {spec.family}, r={spec.r})")
                    msg = _compare("analytic", dist, "table", tab)
                    if msg:
                        mismatches.append(msg)
                except TableError as exc:
                    diags.append(f"closed-form table not applicable: {exc}")
            diags.append("method: " + " + ".join(used))
    diags.extend(f"MISMATCH: {m}" for m in mismatches)
    report = build_report(L, dist, diags, cfg.budget, generators=delta.to_text())
    return report, mismatches


def render_report(report: CodeReport, fmt: str) -> str:
    if fmt == "json":
        return canonical_json(report.to_json_dict())
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["weight", "frequency"])
        for wt, f in report.distribution.entries:
            w.writerow([wt, f])
        return buf.getvalue()
    v = report.verdict
    lines = [
        f"p={report.p} m={report.m} Delta=<{report.generators}> variant={report.variant}",
        f"ring length |L| = {report.length_ring}",
        f"Gray image [n, k, d] = [{report.n}, {report.k}, {report.d}]  size={report.size}",
        f"weight enumerator: {report.distribution.enumerator()}",
        f"dual distance class: {dual_class_label(report.dual_distance_class)}",
    ]
    if v is not None:
        lines.append(f"Griesmer sum at d: {v.griesmer_sum_d}; at d+1: {v.griesmer_sum_d_plus_1}")
        lines.append(f"verdict: {report.label()}  (distance optimal: {v.distance_optimal.value})")
    lines.extend(f"note: {d}" for d in report.diagnostics)
    return "\n".join(lines) + "\n"


def cmd_analyze(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    report, mismatches = run_analysis(cfg)
    _emit(render_report(report, cfg.fmt), cfg.out)
    if args.matrix_out:
        L = DefiningSet.from_downset(_resolve_downset(cfg)[0], cfg.variant)
        with open(args.matrix_out, "w", encoding="utf-8") as f:
            f.write(gray_generator_matrix(L, cfg.budget).to_text())
    return EXIT_MISMATCH if mismatches else EXIT_OK


# -- verify ----------------------------------------------------------------

@dataclass
class CaseResult:
    label: str
    passed: bool
    notes: list[str]
    distributions: dict[str, list[list[int]]]

    def as_dict(self) -> dict:
        return {"case": self.label, "passed": self.passed, "notes": self.notes,
                "distributions": self.distributions}


def verify_family_case(spec: FamilySpec, budget: int, workers: int = 1,
                       strict_table: bool = False) -> CaseResult:
    """Brute force, analytic and closed-form table must agree exactly."""
    delta = spec.down_set()
    L = DefiningSet.from_downset(delta)
    brute = brute_force_distribution(L, budget, workers=workers)
    analytic = distribution_analytic(delta, Variant.COMPLEMENT, budget)
    dists = {"brute": brute.to_pairs(), "analytic": analytic.to_pairs()}
    notes = []
    passed = brute == analytic
    if not passed:
        notes.append("brute force and analytic disagree")
    try:
        tab = table_distribution(spec)
        dists["table"] = tab.to_pairs()
        if tab != analytic:
            passed = False
            notes.append("closed-form table disagrees with the computed distribution")
    except TableError as exc:
        notes.append(f"table inapplicable: {exc}")
        if strict_table:
            passed = False
    label = f"family={spec.family} p={spec.p} m={spec.m} r={spec.r}"
    return CaseResult(label, passed, notes, dists)


def verify_random_case(delta: DownSet, budget: int, workers: int = 1) -> CaseResult:
    L = DefiningSet.from_downset(delta)
    brute = brute_force_distribution(L, budget, workers=workers)
    analytic = distribution_analytic(delta, Variant.COMPLEMENT, budget)
    passed = brute == analytic
    notes = [] if passed else ["brute force and analytic disagree"]
    return CaseResult(f"p={delta.p} m={delta.m} Delta=<{delta.to_text()}>", passed, notes,
                      {"brute": brute.to_pairs(), "analytic": analytic.to_pairs()})


def cmd_verify(args: argparse.Namespace) -> int:
    p = check_prime(args.p)
    if args.m is None:
        raise ParameterError("verify needs --m")
    ms = parse_range(args.m)
    cases: list = []
    if args.family is not None:
        if args.r is None:
            raise ParameterError("--family needs --r")
        for m in ms:
            for r in parse_range(args.r):
                cases.append(FamilySpec(args.family, p, m, r))
    if args.random:
        rng = np.random.default_rng(args.seed)
        for i in range(args.random):
            cases.append(random_downset(rng, p, ms[i % len(ms)]))
    if not cases:
        raise ParameterError("nothing to verify: give --family/--r and/or --random N")
    # Check every budget up front so a sweep never dies half-way.
    for case in cases:
        delta = case.down_set() if isinstance(case, FamilySpec) else case
        cost = brute_force_cost(DefiningSet.from_downset(delta))
        if cost > args.budget:
            raise BudgetExceeded(f"brute force for {delta}", cost, args.budget)

    results = []
    for case in cases:
        if isinstance(case, FamilySpec):
            results.append(verify_family_case(case, args.budget, args.workers, args.strict_table))
        else:
            results.append(verify_random_case(case, args.budget, args.workers))

    ok = all(r.passed for r in results)
    if args.format == "json":
        text = canonical_json({"passed": ok, "cases": [r.as_dict() for r in results]})
    else:
        lines = []
        for r in results:
            lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.label}")
            for n in r.notes:
                lines.append(f"  note: {n}")
            if not r.passed:
                for name, pairs in r.distributions.items():
                    lines.append(f"  {name}: {pairs}")
        lines.append(f"{sum(r.passed for r in results)}/{len(results)} cases passed")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_MISMATCH


# -- table5 ----------------------------------------------------------------

TABLE5_FIELDS = ["p", "n", "k", "d", "label", "flag"]


def cmd_table5(args: argparse.Namespace) -> int:
    ms = parse_range(args.m or "3,4")
    if any(m < 3 for m in ms):
        raise ParameterError("table5 rows need m >= 3")
    rows = table5(args.p, ms)
    if args.format == "json":
        text = canonical_json([{k: r.as_dict()[k] for k in TABLE5_FIELDS} for r in rows])
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=TABLE5_FIELDS, lineterminator="\n",
                           extrasaction="ignore")
        w.writeheader()
        for r in rows:
            w.writerow(r.as_dict())
        text = buf.getvalue()
    else:
        lines = [f"{'p':>2} {'n':>10} {'k':>2} {'d':>9}  label"]
        for r in rows:
            flag = f"  [{r.flag}]" if r.flag else ""
            lines.append(f"{r.p:>2} {r.n:>10} {r.k:>2} {r.d:>9}  {r.label}{flag}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


# -- plumbing --------------------------------------------------------------

def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        p=args.p, m=args.m, gens=args.gens, variant=Variant(args.variant),
        method=args.method, budget=args.budget, fmt=args.format, out=args.out,
        family=args.family, r=args.r, seed=args.seed, workers=args.workers,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="downset-codes",
        description="Few-Lee-weight codes over F_p + uF_p from down sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, fmt_default: str) -> None:
        sp.add_argument("--p", type=int, required=True, help="odd prime (2 allowed for brute force)")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="max coordinate evaluations for brute force")
        sp.add_argument("--format", choices=("json", "csv", "text"), default=fmt_default)
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--workers", type=int, default=1)

    a = sub.add_parser("analyze", help="construct a code and report its parameters")
    common(a, "json")
    a.add_argument("--m", type=int)
    a.add_argument("--gens", help='down-set generators, e.g. "2,1,0;1,2,0"')
    a.add_argument("--variant", choices=[v.value for v in (Variant.COMPLEMENT, Variant.DIRECT)],
                   default="complement")
    a.add_argument("--family", type=int)
    a.add_argument("--r")
    a.add_argument("--method", choices=METHODS, default="auto")
    a.add_argument("--matrix-out", help="also write the Gray generator matrix here")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="cross-check brute force, analytic and tables")
    common(v, "text")
    v.add_argument("--m", help="dimension or range, e.g. 3 or 2..3")
    v.add_argument("--family", type=int)
    v.add_argument("--r", help="value or range a..b")
    v.add_argument("--random", type=int, default=0, help="also check N random down sets")
    v.add_argument("--strict-table", action="store_true",
                   help="count an inapplicable closed-form table as a failure")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table5", help="optimal Gray images of families 1 and 2")
    common(t, "csv")
    t.add_argument("--m", help="comma list of dimensions, default 3,4")
    t.set_defaults(func=cmd_table5)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_INVALID
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
