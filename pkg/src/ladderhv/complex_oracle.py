"""Brute-force ground truth at desk scale.

Faces of the antichain-avoiding complex are sets of lattice cells of the
region.  A t-antichain is t cells with strictly increasing matrix rows and
columns, i.e. strictly increasing x and strictly decreasing y.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ladderhv.arrays import TwoRowedArray, count_arrays_dp, count_families_dp, validate_array
from ladderhv.hilbert import binom
from ladderhv.ladder import Cogenerator, LadderRegion, PathSystemData, Point, staircase

DEFAULT_CAP = 20


class OracleCapExceeded(ValueError):
    pass


def is_t_antichain(cells: Sequence, t: int) -> bool:
    if len(cells) != t:
        return False
    pts = sorted(cells)
    return all(p[0] < q[0] and p[1] > q[1] for p, q in zip(pts, pts[1:]))


def longest_antichain(cells: Iterable) -> int:
    pts = sorted(cells)
    best = []
    for i, (x, y) in enumerate(pts):
        best.append(1 + max((best[j] for j in range(i) if pts[j][0] < x and pts[j][1] > y), default=0))
    return max(best, default=0)


@dataclass(frozen=True)
class RestrictedZone:
    t: int
    rows_below: int  # lattice rows y <= rows_below
    cols_from: int   # lattice columns x >= cols_from

    def __contains__(self, p) -> bool:
        return p[1] <= self.rows_below or p[0] >= self.cols_from


def restricted_zones(a: int, b: int, M: Cogenerator) -> list[RestrictedZone]:
    """D_t for t = 1..n+1: last u_t - 1 matrix rows and last v_t - 1 columns."""
    u = M.u + (b + 2,)
    v = M.v + (a + 2,)
    return [RestrictedZone(t + 1, u[t] - 2, a - v[t] + 2) for t in range(M.n + 1)]


def is_face(cells: Iterable, region: LadderRegion, M: Cogenerator) -> bool:
    cells = list(cells)
    if any(p not in region for p in cells):
        return False
    for D in restricted_zones(region.a, region.b, M):
        if longest_antichain([p for p in cells if p in D]) >= D.t:
            return False
    return True


def enumerate_faces(region: LadderRegion, M: Cogenerator, cap: int = DEFAULT_CAP):
    """All faces (as sorted tuples of Points), by backtracking with pruning."""
    cells = region.points()
    if len(cells) > cap:
        raise OracleCapExceeded(f"region has {len(cells)} cells, above the oracle cap of {cap}")
    zones = restricted_zones(region.a, region.b, M)
    cells.sort()
    # cells are added in (x, y) order, so a new cell can only end an antichain;
    # ends[i][z] = longest antichain inside zone z ending at face[i]
    inside = [[c in D for D in zones] for c in cells]

    def rec(start, face, ends):
        yield tuple(cells[i] for i in face)
        for i in range(start, len(cells)):
            x, y = cells[i]
            row = []
            for z, D in enumerate(zones):
                if not inside[i][z]:
                    row.append(0)
                    continue
                best = max((e[z] for j, e in zip(face, ends) if cells[j][0] < x and cells[j][1] > y), default=0)
                if best + 1 >= D.t:
                    break
                row.append(best + 1)
            else:
                face.append(i)
                ends.append(row)
                yield from rec(i + 1, face, ends)
                face.pop()
                ends.pop()

    yield from rec(0, [], [])


def face_counts(region: LadderRegion, M: Cogenerator, cap: int = DEFAULT_CAP) -> list[int]:
    """f_k = number of faces with k + 1 cells, for k = 0, 1, ..."""
    sizes = Counter(len(f) for f in enumerate_faces(region, M, cap))
    top = max(sizes)
    return [sizes[k + 1] for k in range(top)]


def hilbert_via_faces(f: Sequence[int], ell: int) -> int:
    return sum(binom(ell - 1, k) * fk for k, fk in enumerate(f))


@dataclass
class LatticePathFamily:
    paths: list[list[Point]]
    turns: list[list[Point]]

    def point_set(self) -> set[Point]:
        return set().union(*map(set, self.paths)) if self.paths else set()


def _path_tops(start: Point, end: Point, wall: Sequence[Point], sources: Iterable) -> list[int]:
    tops = {}
    for x, y in wall:
        tops[x] = max(tops.get(x, y), y)
    for r, s in sources:
        if start.x <= r < end.x and s > tops[r]:
            tops[r] = s
    out, run = [], start.y
    for x in range(start.x, end.x):
        run = max(run, tops[x])
        out.append(run)
    out.append(end.y)
    return out


def ne_turns(path: Sequence[Point]) -> list[Point]:
    """Points entered by a north step and left by an east step."""
    return [q for p, q, r in zip(path, path[1:], path[2:]) if q.x == p.x and r.y == q.y]


def light_and_shadow(face: Iterable, psd: PathSystemData) -> tuple[LatticePathFamily, list[TwoRowedArray]]:
    """Reduce a face to a non-intersecting path family P and its turn arrays P'.

    Path i is the north-east border of the shadows {x >= r, y <= s} cast by
    the remaining face cells and by the wall of level i (the lower-right
    boundary path of L(i)).  Face cells on path i are used up.  P' keeps the
    north-east turns of each path that are not on its wall.
    """
    remaining = set(map(Point._make, face))
    paths, turns, reduced = [], [], []
    for i in range(psd.n):
        A, E = psd.A[i], psd.E[i]
        wall = psd.wall(i)
        tops = _path_tops(A, E, wall, remaining)
        path = staircase(A, E, tops)
        remaining -= set(path)
        on_wall = set(wall)
        t = [p for p in ne_turns(path) if p not in on_wall]
        paths.append(path)
        turns.append(t)
        reduced.append(TwoRowedArray.from_points(t))
    if remaining:
        raise AssertionError(f"face cells {sorted(remaining)} lie on no path")
    return LatticePathFamily(paths, turns), reduced


def family_counts(psd: PathSystemData) -> list[int]:
    if psd.n == 1:
        return count_arrays_dp(psd.counting_region(0), psd.bounds(0))
    return count_families_dp(psd)


@dataclass
class PreimageReport:
    d: int
    f: list[int]
    T: list[int]
    predicted_f: list[int]
    fiber_mismatches: list[tuple] = field(default_factory=list)
    invalid_reductions: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.f == self.predicted_f and not self.fiber_mismatches and not self.invalid_reductions


def predicted_face_counts(d: int, T: Sequence[int]) -> list[int]:
    """f_k = sum_m binom(d - m, k + 1 - m) |T_m|, for k = 0..d-1."""
    return [sum(binom(d - m, k + 1 - m) * Tm for m, Tm in enumerate(T)) for k in range(d)]


def preimage_formula_check(psd: PathSystemData, cap: int = DEFAULT_CAP) -> PreimageReport:
    """Group all faces by their reduced family and compare fiber sizes with
    binom(d - m, size - m); also compare f_k with the predicted counts."""
    region, d = psd.region, psd.d
    fibers: dict[tuple, Counter] = defaultdict(Counter)
    invalid = []
    for face in enumerate_faces(region, psd.cogenerator, cap):
        _, reduced = light_and_shadow(face, psd)
        key = tuple(reduced)
        if key not in fibers:
            good = all(validate_array(T, psd.bounds(i), psd.counting_region(i))
                       for i, T in enumerate(reduced))
            if not good:
                invalid.append((face, key))
        fibers[key][len(face)] += 1
    sizes = Counter()
    for counter in fibers.values():
        sizes.update(counter)
    f = [sizes[k + 1] for k in range(max(sizes))] if sizes else []
    T = family_counts(psd)
    predicted = predicted_face_counts(d, T)
    while predicted and predicted[-1] == 0:
        predicted.pop()
    mismatches = []
    for key, counter in fibers.items():
        m = sum(map(len, key))
        for size in range(m, d + 1):
            if counter.get(size, 0) != binom(d - m, size - m):
                mismatches.append((key, size, counter.get(size, 0), binom(d - m, size - m)))
    return PreimageReport(d, f, list(T), predicted, mismatches, invalid)
