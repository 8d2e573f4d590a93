"""Ladder regions, cogenerators and the derived path-system data.

Coordinates: x is the column (0..a, growing right), y is the row (0..b,
growing up).  Matrix cell (i, j) of a (b+1) x (a+1) ladder sits at lattice
point (j, b - i).

A region is stored by its boundary functions over a column range.  Columns
at either end of the range are never empty.  Interior columns may be empty;
they are stored as inverted intervals chosen so that both boundary functions
stay weakly increasing (lower = lower of the next non-empty column, upper =
upper of the previous one).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence


class LadderError(ValueError):
    """Invalid region, mask or cogenerator."""


class HypothesisViolation(LadderError):
    """A start or end point of the path system lies outside the region."""


class Point(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class LadderRegion:
    a: int
    b: int
    x_lo: int
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise LadderError("lower and upper have different lengths")
        for x in range(1, len(self.lower)):
            if self.lower[x] < self.lower[x - 1]:
                raise LadderError(f"lower not weakly increasing at column {self.x_lo + x}")
            if self.upper[x] < self.upper[x - 1]:
                raise LadderError(f"upper not weakly increasing at column {self.x_lo + x}")
        if self.lower and (self.lower[0] > self.upper[0] or self.lower[-1] > self.upper[-1]):
            raise LadderError("end columns of the range must be non-empty")

    @property
    def x_hi(self) -> int:
        return self.x_lo + len(self.lower) - 1

    @property
    def columns(self) -> range:
        return range(self.x_lo, self.x_hi + 1)

    def is_empty(self) -> bool:
        return not self.lower

    def low(self, x: int) -> int:
        return self.lower[x - self.x_lo]

    def high(self, x: int) -> int:
        return self.upper[x - self.x_lo]

    def column(self, x: int) -> range:
        """Rows of column x that belong to the region (possibly empty)."""
        if x < self.x_lo or x > self.x_hi:
            return range(0)
        return range(self.low(x), self.high(x) + 1)

    def __contains__(self, p) -> bool:
        x, y = p
        if x < self.x_lo or x > self.x_hi:
            return False
        i = x - self.x_lo
        return self.lower[i] <= y <= self.upper[i]

    def points(self) -> list[Point]:
        return [Point(x, y) for x in self.columns for y in self.column(x)]

    def __len__(self) -> int:
        return sum(max(0, h - l + 1) for l, h in zip(self.lower, self.upper))

    def to_mask(self) -> list[list[bool]]:
        """(b+1) x (a+1) boolean matrix, row i <-> lattice row b - i."""
        return [[(j, self.b - i) in self for j in range(self.a + 1)] for i in range(self.b + 1)]


def empty_region(a: int, b: int) -> LadderRegion:
    return LadderRegion(a, b, 0, (), ())


def region_from_columns(a: int, b: int, cols: Mapping[int, tuple[int, int]]) -> LadderRegion:
    """Build a region from its non-empty columns {x: (lo, hi)}.

    Raises LadderError naming two points whose spanned rectangle is not
    contained in the set, if the columns do not form a ladder region.
    """
    xs = sorted(x for x, (lo, hi) in cols.items() if lo <= hi)
    if not xs:
        return empty_region(a, b)
    for p, q in zip(xs, xs[1:]):
        (plo, phi), (qlo, qhi) = cols[p], cols[q]
        if qlo < plo:
            raise LadderError(f"ladder condition fails for corners ({p},{plo}) and ({q},{qlo})")
        if qhi < phi:
            raise LadderError(f"ladder condition fails for corners ({p},{phi}) and ({q},{qhi})")
        if q > p + 1 and qlo <= phi:
            raise LadderError(f"ladder condition fails for corners ({p},{phi}) and ({q},{qlo})")
    lower, upper = [], []
    prev_hi = None
    nxt = iter(xs)
    next_x = next(nxt)
    for x in range(xs[0], xs[-1] + 1):
        if x == next_x:
            lo, hi = cols[x]
            prev_hi = hi
            next_x = next(nxt, None)
        else:
            lo, hi = cols[next_x][0], prev_hi
        lower.append(lo)
        upper.append(hi)
    return LadderRegion(a, b, xs[0], tuple(lower), tuple(upper))


def region_from_points(a: int, b: int, pts: Iterable[Sequence[int]]) -> LadderRegion:
    by_col: dict[int, list[int]] = {}
    for x, y in pts:
        by_col.setdefault(x, []).append(y)
    cols = {}
    for x, ys in by_col.items():
        ys.sort()
        for y0, y1 in zip(ys, ys[1:]):
            if y1 > y0 + 1:
                raise LadderError(f"ladder condition fails for corners ({x},{y1}) and ({x},{y0})")
        cols[x] = (ys[0], ys[-1])
    return region_from_columns(a, b, cols)


def validate_region(a: int, b: int, lower: Sequence[int], upper: Sequence[int],
                    x_lo: int = 0) -> LadderRegion:
    """Region from boundary lists over columns x_lo, x_lo+1, ...

    Every listed column must be non-empty.
    """
    if a < 0 or b < 0:
        raise LadderError("a and b must be non-negative")
    if len(lower) != len(upper):
        raise LadderError("lower and upper must have equal length")
    if x_lo < 0 or x_lo + len(lower) - 1 > a:
        raise LadderError("column range exceeds 0..a")
    for i, (lo, hi) in enumerate(zip(lower, upper)):
        x = x_lo + i
        if not (0 <= lo <= b and 0 <= hi <= b):
            raise LadderError(f"boundary value out of range 0..{b} at column {x}")
        if lo > hi:
            raise LadderError(f"lower > upper at column {x}")
        if i and lo < lower[i - 1]:
            raise LadderError(f"lower not weakly increasing at column {x}")
        if i and hi < upper[i - 1]:
            raise LadderError(f"upper not weakly increasing at column {x}")
    return LadderRegion(a, b, x_lo, tuple(lower), tuple(upper))


def region_from_matrix_mask(mask: Sequence[Sequence[bool]]) -> LadderRegion:
    """Region of a ladder given as a (b+1) x (a+1) mask of non-zero entries."""
    b = len(mask) - 1
    if b < 0:
        raise LadderError("empty mask")
    a = len(mask[0]) - 1
    if any(len(row) != a + 1 for row in mask):
        raise LadderError("mask rows have unequal length")
    pts = [(j, b - i) for i in range(b + 1) for j in range(a + 1) if mask[i][j]]
    return region_from_points(a, b, pts)


def contains(region: LadderRegion, p) -> bool:
    return p in region


def region_difference_as_ladder(region: LadderRegion, boundary: Iterable | None = None) -> LadderRegion:
    """The region minus its lower-right boundary, as a ladder region.

    Keeps (x, y) iff (x+1, y-1) is also in the region.  When `boundary` is
    given, the result is checked pointwise against the set difference.
    """
    cols = {}
    for x in region.columns:
        if x + 1 > region.x_hi:
            break
        lo = max(region.low(x), region.low(x + 1) + 1)
        hi = region.high(x)
        if lo <= hi:
            cols[x] = (lo, hi)
    out = region_from_columns(region.a, region.b, cols)
    if boundary is not None:
        expected = set(region.points()) - set(map(Point._make, boundary))
        if set(out.points()) != expected:
            raise AssertionError("boundary-function difference disagrees with the set difference")
    return out


def lower_right_boundary(region: LadderRegion) -> frozenset[Point]:
    return frozenset(p for p in region.points() if (p.x + 1, p.y - 1) not in region)


@dataclass(frozen=True)
class Cogenerator:
    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "v", tuple(self.v))
        if not self.u or len(self.u) != len(self.v):
            raise LadderError("u and v must be non-empty and of equal length")
        for name, seq in (("u", self.u), ("v", self.v)):
            if seq[0] < 1:
                raise LadderError(f"{name} entries must be >= 1")
            if any(s >= t for s, t in zip(seq, seq[1:])):
                raise LadderError(f"{name} must be strictly increasing")

    @property
    def n(self) -> int:
        return len(self.u)

    def check_fits(self, a: int, b: int) -> None:
        if self.u[-1] > b + 1:
            raise LadderError(f"u_n = {self.u[-1]} exceeds b+1 = {b + 1}")
        if self.v[-1] > a + 1:
            raise LadderError(f"v_n = {self.v[-1]} exceeds a+1 = {a + 1}")

    def __str__(self):
        return f"[{','.join(map(str, self.u))}|{','.join(map(str, self.v))}]"


def clip(region: LadderRegion, x_max: int, y_min: int) -> LadderRegion:
    cols = {}
    for x in region.columns:
        if x > x_max:
            break
        lo, hi = max(region.low(x), y_min), region.high(x)
        if lo <= hi:
            cols[x] = (lo, hi)
    return region_from_columns(region.a, region.b, cols)


def shrink(region: LadderRegion, x_max: int, y_min: int) -> LadderRegion:
    """Points (x, y) of region with x <= x_max, y >= y_min and (x+1, y-1) in region."""
    return clip(region_difference_as_ladder(region), x_max, y_min)


@dataclass(frozen=True)
class PathSystemData:
    """Start/end points, shrunken regions L(i), their boundaries B(i) and d.

    Lists are indexed from 0, so levels[0] is L(1).
    """

    region: LadderRegion
    cogenerator: Cogenerator
    A: tuple[Point, ...]
    E: tuple[Point, ...]
    levels: tuple[LadderRegion, ...]
    boundaries: tuple[frozenset, ...]
    d: int
    _counting: tuple = field(default=(), repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.A)

    def bounds(self, i: int):
        from ladderhv.arrays import Bounds

        return Bounds(tuple(self.A[i]), tuple(self.E[i]))

    def counting_region(self, i: int) -> LadderRegion:
        """L(i) minus B(i): where the turns of the i-th array may lie."""
        return self._counting[i]

    def wall(self, i: int) -> list[Point]:
        return boundary_path(self.levels[i], self.A[i], self.E[i])


def derive_path_system(region: LadderRegion, M: Cogenerator) -> PathSystemData:
    a, b, n = region.a, region.b, M.n
    M.check_fits(a, b)
    A = tuple(Point(0, M.u[n - 1 - i] - 1) for i in range(n))
    E = tuple(Point(a - M.v[n - 1 - i] + 1, b) for i in range(n))
    for i in range(n):
        if A[i] not in region:
            raise HypothesisViolation(f"start point A({i + 1}) = {tuple(A[i])} is not in the region")
        if E[i] not in region:
            raise HypothesisViolation(f"end point E({i + 1}) = {tuple(E[i])} is not in the region")
    # L(n) is clipped to the box of its own path; a no-op when u_1 = v_1 = 1.
    levels = [clip(region, E[n - 1].x, A[n - 1].y)]
    for i in range(n - 2, -1, -1):
        levels.append(shrink(levels[-1], E[i].x, A[i].y))
    levels.reverse()
    boundaries = tuple(lower_right_boundary(L) for L in levels)
    d = len(frozenset().union(*boundaries))
    counting = tuple(region_difference_as_ladder(L, B) for L, B in zip(levels, boundaries))
    return PathSystemData(region, M, A, E, tuple(levels), boundaries, d, counting)


def d_closed_formula(region: LadderRegion, M: Cogenerator) -> int:
    return M.n * (region.a + region.b + 3) - sum(M.u) - sum(M.v)


def staircase(start: Point, end: Point, tops: Sequence[int]) -> list[Point]:
    """Lattice path with east/north steps whose highest row in column
    start.x + i is tops[i]."""
    pts = []
    y = start.y
    for i, top in enumerate(tops):
        x = start.x + i
        pts.extend(Point(x, yy) for yy in range(y, top + 1))
        y = top
    if pts[-1] != end:
        raise AssertionError(f"staircase ends at {pts[-1]}, expected {end}")
    return pts


def boundary_path(level: LadderRegion, A: Point, E: Point) -> list[Point]:
    """The lowest path from A to E that never passes below the region.

    This is the lower-right boundary of `level` traced as a path; it may
    visit points outside the region where the region has a notch.
    """
    tops = []
    top = A.y
    for x in range(A.x, E.x):
        if level.x_lo <= x + 1 <= level.x_hi:
            top = max(top, level.low(x + 1))
        elif x == level.x_hi:
            top = max(top, level.high(x))
        tops.append(top)
    tops.append(E.y)
    return staircase(A, E, tops)
