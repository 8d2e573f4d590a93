"""Exhaustive injectivity check on the Figure-2 ladder with a single 2x2 minor.

The domain has about 15 million pairs over all k; expect a long run.

    python scripts/verify_figure2_injection.py [--kmax K]
"""

import argparse
import time

from ladderhv.injection import verify_injectivity
from ladderhv.ladder import Cogenerator, derive_path_system, validate_region


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--cap", type=int, default=10**8)
    args = p.parse_args()

    region = validate_region(8, 9, (0, 0, 0, 0, 0, 2, 3, 7, 7), (3, 3, 7, 7, 8, 9, 9, 9, 9))
    psd = derive_path_system(region, Cogenerator((1,), (1,)))
    t = time.perf_counter()
    rep = verify_injectivity(psd.counting_region(0), psd.bounds(0), args.kmax, args.cap)
    for k in sorted(rep.checked):
        lhs, rhs = rep.inequality(k)
        print(f"k={k}: {rep.checked[k]} pairs, |T_k+1||T_k-1| = {lhs} <= {rhs} = |T_k|^2")
    for k in rep.skipped:
        print(f"k={k}: skipped (cap)")
    print(f"violations: {len(rep.violations)}  ({time.perf_counter() - t:.0f}s)")
    raise SystemExit(0 if rep.ok else 1)


if __name__ == "__main__":
    main()
