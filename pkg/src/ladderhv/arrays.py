"""Two-rowed arrays and their counts.

An array of length k is read as the k north-east turns of a lattice path:
turn i is the point (top[i], bottom[i]).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from ladderhv.ladder import LadderRegion, PathSystemData, Point


@dataclass(frozen=True, order=True)
class TwoRowedArray:
    top: tuple[int, ...] = ()
    bottom: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom):
            raise ValueError("rows of a two-rowed array must have equal length")
        for row in (self.top, self.bottom):
            if any(s >= t for s, t in zip(row, row[1:])):
                raise ValueError(f"row {row} is not strictly increasing")

    def __len__(self) -> int:
        return len(self.top)

    def points(self) -> list[Point]:
        return [Point(x, y) for x, y in zip(self.top, self.bottom)]

    @classmethod
    def from_points(cls, pts: Iterable[Sequence[int]]) -> "TwoRowedArray":
        pts = sorted(pts)
        return cls(tuple(p[0] for p in pts), tuple(p[1] for p in pts))


EMPTY = TwoRowedArray()


@dataclass(frozen=True)
class Bounds:
    A: tuple[int, int]
    E: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(self.A))
        object.__setattr__(self, "E", tuple(self.E))

    @property
    def columns(self) -> range:
        return range(self.A[0], self.E[0])

    @property
    def rows(self) -> range:
        return range(self.A[1] + 1, self.E[1] + 1)


def validate_array(T: TwoRowedArray, bounds: Bounds, region: LadderRegion | None) -> bool:
    if not len(T):
        return True
    if T.top[0] < bounds.A[0] or T.top[-1] > bounds.E[0] - 1:
        return False
    if T.bottom[0] < bounds.A[1] + 1 or T.bottom[-1] > bounds.E[1]:
        return False
    return region is None or all(p in region for p in T.points())


def intersects(T1: TwoRowedArray, bounds1: Bounds, T2: TwoRowedArray) -> bool:
    """Condition (x): some turn of T2 lies weakly north-west of an
    east-then-north corner (a_I, b_{I-1}) of T1's path.

    Sentinels a_{k+1} = E_1 and b_0 = A_2 come from T1's bounds only.
    """
    a = T1.top + (bounds1.E[0],)
    b = (bounds1.A[1],) + T1.bottom
    return any(xj <= ai and bi <= yj for ai, bi in zip(a, b) for xj, yj in zip(T2.top, T2.bottom))


def enumerate_arrays(region: LadderRegion | None, bounds: Bounds, k: int) -> list[TwoRowedArray]:
    """All arrays of length k within bounds and region, in (top, bottom) order."""
    if k == 0:
        return [EMPTY]
    out = []
    for top in itertools.combinations(bounds.columns, k):
        for bottom in itertools.combinations(bounds.rows, k):
            if region is None or all(p in region for p in zip(top, bottom)):
                out.append(TwoRowedArray(top, bottom))
    return out


def admissible_points(region: LadderRegion | None, bounds: Bounds) -> list[Point]:
    return [Point(x, y) for x in bounds.columns for y in bounds.rows
            if region is None or (x, y) in region]


def trim(counts: list[int]) -> list[int]:
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def count_arrays_dp(region: LadderRegion | None, bounds: Bounds) -> list[int]:
    """counts[k] = number of arrays of length k within bounds and region.

    Chains of admissible points, strictly increasing in both coordinates,
    counted by length with a 2D prefix sum per length.
    """
    cols, rows = bounds.columns, bounds.rows
    w, h = len(cols), len(rows)
    allowed = [[region is None or (cols[i], rows[j]) in region for j in range(h)] for i in range(w)]
    counts = [1]
    # ending[i][j]: chains of the current length whose last point is (cols[i], rows[j])
    ending = [[1 if allowed[i][j] else 0 for j in range(h)] for i in range(w)]
    while True:
        total = sum(map(sum, ending))
        if not total:
            break
        counts.append(total)
        # pre[i][j] = sum of ending over columns < i and rows < j
        pre = [[0] * (h + 1) for _ in range(w + 1)]
        for i in range(w):
            for j in range(h):
                pre[i + 1][j + 1] = ending[i][j] + pre[i][j + 1] + pre[i + 1][j] - pre[i][j]
        ending = [[pre[i][j] if allowed[i][j] else 0 for j in range(h)] for i in range(w)]
    return counts


@dataclass(frozen=True)
class ArrayFamily:
    members: tuple[TwoRowedArray, ...]
    bounds: tuple[Bounds, ...]

    @property
    def total_length(self) -> int:
        return sum(map(len, self.members))

    def is_non_intersecting(self) -> bool:
        n = len(self.members)
        return not any(intersects(self.members[i], self.bounds[i], self.members[j])
                       for i in range(n) for j in range(i + 1, n))


def enumerate_families(psd: PathSystemData, max_families: int = 10**6) -> list[int]:
    """Brute force: counts[l] = non-intersecting families of total length l.

    Member i ranges over arrays in L(i) minus B(i) bounded by A(i), E(i);
    every pair i < j is tested with condition (x).
    """
    per_level = []
    size = 1
    for i in range(psd.n):
        region, bounds = psd.counting_region(i), psd.bounds(i)
        arrays = []
        for k in range(len(count_arrays_dp(region, bounds))):
            arrays.extend(enumerate_arrays(region, bounds, k))
        per_level.append(arrays)
        size *= len(arrays)
    if size > max_families:
        raise ValueError(f"{size} candidate families exceed the brute-force cap {max_families}")
    bounds = [psd.bounds(i) for i in range(psd.n)]
    counts: list[int] = [0]
    for family in itertools.product(*per_level):
        if ArrayFamily(family, tuple(bounds)).is_non_intersecting():
            ell = sum(map(len, family))
            counts.extend([0] * (ell + 1 - len(counts)))
            counts[ell] += 1
    return trim(counts)


def count_families_dp(psd: PathSystemData) -> list[int]:
    """Transfer-matrix count of non-intersecting path families by total turns.

    Sweeps columns left to right.  The state is the tuple of current top
    rows of the still-active paths (path i ends at column E(i)_1).  A path
    enters column x at its previous top, rises to its new top, and has a
    north-east turn there if it rose and steps east afterwards; such a turn
    must lie in L(i) minus B(i).  Disjointness of consecutive paths in each
    column forces all paths apart.
    """
    n, b = psd.n, psd.region.b
    turn_ok = [psd.counting_region(i) for i in range(n)]
    end_x = [e.x for e in psd.E]
    last = end_x[-1]

    def choices(x, bots):
        # yields (tops, turns) for the active paths, given their entry rows
        active = len(bots)
        offset = n - active

        def rec(i, below_top, acc, turns):
            # choose paths from the lowest (index n-1) upwards
            if i < offset:
                yield tuple(reversed(acc)), turns
                return
            bot = bots[i - offset]
            if below_top is not None and below_top >= bot:
                return
            lo_top, hi_top = bot, b
            if x == end_x[i]:
                lo_top = b
            for top in range(lo_top, hi_top + 1):
                turn = top > bot and x < end_x[i]
                if turn and (x, top) not in turn_ok[i]:
                    continue
                yield from rec(i - 1, top, acc + [top], turns + turn)

        yield from rec(n - 1, None, [], 0)

    states: dict[tuple, list[int]] = {tuple(p.y for p in psd.A): [1]}
    for x in range(0, last + 1):
        nxt: dict[tuple, list[int]] = {}
        for bots, poly in states.items():
            for tops, turns in choices(x, bots):
                # paths whose last column is x drop out of the state
                key = tuple(t for t, i in zip(tops, range(n - len(bots), n)) if end_x[i] > x)
                acc = nxt.setdefault(key, [])
                need = len(poly) + turns
                if len(acc) < need:
                    acc.extend([0] * (need - len(acc)))
                for m, c in enumerate(poly):
                    acc[m + turns] += c
        states = nxt
    total = states.get((), [0])
    return trim(list(total))
