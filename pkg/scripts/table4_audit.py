"""Audit the closed-form family-4 distribution against the character-sum route.

Prints, per (p, m, r), whether the closed form is valid, has negative
frequencies, or silently disagrees.  --brute adds an exhaustive check of the
character-sum distribution where the budget allows.
"""

import argparse

from downset_codes.analytic import FamilySpec, TableError, distribution_analytic, table_distribution
from downset_codes.codes import DefiningSet, brute_force_cost, brute_force_distribution


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, nargs="+", default=[5, 7, 11])
    ap.add_argument("--m", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--brute", action="store_true")
    ap.add_argument("--budget", type=int, default=3 * 10**9)
    args = ap.parse_args()

    for p in args.p:
        for m in args.m:
            for r in range(1, p - 1):
                spec = FamilySpec(4, p, m, r)
                analytic = distribution_analytic(spec.down_set())
                try:
                    status = "ok" if table_distribution(spec) == analytic else "WRONG"
                except TableError as exc:
                    status = f"invalid ({exc})"
                extra = ""
                if args.brute:
                    L = DefiningSet.from_downset(spec.down_set())
                    if brute_force_cost(L) <= args.budget:
                        same = brute_force_distribution(L, args.budget) == analytic
                        extra = f"  brute={'agrees' if same else 'DISAGREES'}"
                print(f"p={p} m={m} r={r}: table {status}{extra}")
                if status == "WRONG":
                    print(f"    computed {analytic.to_pairs()}")


if __name__ == "__main__":
    main()
