"""Seeded scan of h-vector log-concavity for several minors (n >= 2).

    python scripts/conjecture_scan.py --count 200 --seed 0 --max-side 7
"""

import argparse
import random
import time

from ladderhv.hilbert import hilbert_series, is_log_concave
from ladderhv.suites import random_instances


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-side", type=int, default=7)
    args = p.parse_args()

    print(f"seed = {args.seed}")
    t = time.perf_counter()
    instances = random_instances(random.Random(args.seed), args.count, max_side=args.max_side)
    candidates = 0
    for region, M in instances:
        s = hilbert_series(region, M)
        if not is_log_concave(s.numerator):
            candidates += 1
            print(f"conjecture counterexample candidate: lower={region.lower} upper={region.upper} M={M} h={tuple(s.numerator)}")
    print(f"{len(instances)} instances, {candidates} candidates, {time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main()
