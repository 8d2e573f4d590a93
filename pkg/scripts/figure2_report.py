"""Path system, h-vector and an SVG of the Figure-2 ladder.

    python scripts/figure2_report.py [-o figure2.svg]
"""

import argparse
from pathlib import Path

from ladderhv.arrays import TwoRowedArray
from ladderhv.complex_oracle import light_and_shadow
from ladderhv.hilbert import HilbertSeries, h_vector_from_psd, is_log_concave
from ladderhv.ladder import Cogenerator, d_closed_formula, derive_path_system, validate_region
from ladderhv.render import render_svg

FACE = [(6, 8), (2, 7), (3, 6), (6, 6), (2, 5), (5, 8), (4, 5), (3, 3), (1, 2), (2, 1), (3, 1)]


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("-o", "--output", default="figure2.svg")
    args = p.parse_args()

    region = validate_region(8, 9, (0, 0, 0, 0, 0, 2, 3, 7, 7), (3, 3, 7, 7, 8, 9, 9, 9, 9))
    M = Cogenerator((1, 3, 4), (1, 2, 4))
    psd = derive_path_system(region, M)
    for i in range(psd.n):
        print(f"path {i + 1}: A={tuple(psd.A[i])} E={tuple(psd.E[i])} |B|={len(psd.boundaries[i])}")
    print(f"d = {psd.d} (closed formula {d_closed_formula(region, M)})")
    h = h_vector_from_psd(psd)
    print(f"series = {HilbertSeries(h, psd.d)}")
    print(f"log-concave: {is_log_concave(h)}")

    family, reduced = light_and_shadow(FACE, psd)
    for i, turns in enumerate(family.turns):
        print(f"face turns on path {i + 1}: {[tuple(t) for t in turns]}")
    svg = render_svg(region, psd.A, psd.E, [TwoRowedArray(T.top, T.bottom) for T in reduced],
                     [psd.wall(i) for i in range(psd.n)])
    Path(args.output).write_text(svg)
    print(f"wrote {args.output}")


if __name__ == "__main__":
    main()
