"""Instance generators for the verification suites."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from ladderhv.ladder import (Cogenerator, HypothesisViolation, LadderError, LadderRegion,
                             derive_path_system, region_from_points, validate_region)


@dataclass(frozen=True)
class SuiteConfig:
    box_rows: int = 3
    box_cols: int = 4
    random_regions: int = 100
    random_box: int = 6
    conjecture_instances: int = 25
    seed: int = 0
    cap: int = 10**7


def parse_box(spec: str) -> tuple[int, int]:
    """'3x4' -> (rows, cols) of the matrix."""
    rows, cols = spec.lower().split("x")
    return int(rows), int(cols)


def full_region(a: int, b: int) -> LadderRegion:
    return validate_region(a, b, [0] * (a + 1), [b] * (a + 1))


def ladder_regions_in_box(rows: int, cols: int) -> Iterator[LadderRegion]:
    """Every non-empty ladder region inside a rows x cols matrix (a = cols-1, b = rows-1)."""
    a, b = cols - 1, rows - 1
    cells = [(x, y) for x in range(cols) for y in range(rows)]
    for bits in range(1, 1 << len(cells)):
        pts = [c for i, c in enumerate(cells) if bits >> i & 1]
        try:
            yield region_from_points(a, b, pts)
        except LadderError:
            continue


def random_region(rng: random.Random, a: int, b: int, corners: bool = True) -> LadderRegion:
    """Random region with weakly increasing boundaries; contains (0,0) and
    (a,b) when `corners` is set."""
    lower = sorted(rng.randint(0, b) for _ in range(a + 1))
    upper = sorted(rng.randint(0, b) for _ in range(a + 1))
    if corners:
        lower[0], upper[-1] = 0, b
    upper = [max(lo, hi) for lo, hi in zip(lower, upper)]
    return validate_region(a, b, lower, upper)


def random_cogenerator(rng: random.Random, a: int, b: int, n: int) -> Cogenerator:
    u = sorted(rng.sample(range(1, b + 2), n))
    v = sorted(rng.sample(range(1, a + 2), n))
    return Cogenerator(u, v)


def random_instances(rng: random.Random, count: int, n_choices=(2, 3), max_side: int = 7,
                     max_tries: int | None = None):
    """Random (region, M) pairs meeting the start/end point hypothesis.

    Stops early (returning fewer pairs) after max_tries draws, by default
    1000 per requested pair.
    """
    out = []
    for _ in range(1000 * count if max_tries is None else max_tries):
        if len(out) == count:
            break
        n = rng.choice(n_choices)
        a, b = rng.randint(n, max_side), rng.randint(n, max_side)
        region = random_region(rng, a, b)
        M = random_cogenerator(rng, a, b, n)
        try:
            derive_path_system(region, M)
        except HypothesisViolation:
            continue
        out.append((region, M))
    return out


def box_shapes(rows: int, cols: int) -> list[tuple[int, int]]:
    return sorted({(rows, cols), (cols, rows)})


def region_suite(config: SuiteConfig) -> list[LadderRegion]:
    """All ladder regions in the box (both orientations) plus seeded random ones."""
    regions = []
    for r, c in box_shapes(config.box_rows, config.box_cols):
        regions.extend(ladder_regions_in_box(r, c))
    rng = random.Random(config.seed)
    side = config.random_box - 1
    regions.extend(random_region(rng, side, side) for _ in range(config.random_regions))
    return regions


def all_cogenerators(a: int, b: int, n: int) -> Iterator[Cogenerator]:
    for u in itertools.combinations(range(1, b + 2), n):
        for v in itertools.combinations(range(1, a + 2), n):
            yield Cogenerator(u, v)
