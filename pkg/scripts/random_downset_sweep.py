"""Compare analytic and brute-force distributions on random multi-generator down sets.

Also tallies how many distinct nonzero weights the resulting codes have.
"""

import argparse
from collections import Counter

import numpy as np

from downset_codes.analytic import distribution_analytic
from downset_codes.codes import DefiningSet, brute_force_distribution
from downset_codes.poset import random_downset


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, nargs="+", default=[3, 5])
    ap.add_argument("--m", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--cases", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-generators", type=int, default=4)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    weights = Counter()
    failures = 0
    shapes = [(p, m) for p in args.p for m in args.m]
    for i in range(args.cases):
        p, m = shapes[i % len(shapes)]
        delta = random_downset(rng, p, m, max_generators=args.max_generators)
        analytic = distribution_analytic(delta)
        if analytic != brute_force_distribution(DefiningSet.from_downset(delta)):
            failures += 1
            print(f"MISMATCH p={p} m={m} Delta=<{delta.to_text()}>")
        weights[len(analytic.nonzero_weights)] += 1
    print(f"{args.cases - failures}/{args.cases} agree")
    print("distinct nonzero weights:", dict(sorted(weights.items())))


if __name__ == "__main__":
    main()
