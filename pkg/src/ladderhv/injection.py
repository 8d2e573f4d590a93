"""The cutting-point injection T_{k+1} x T_{k-1} -> T_k x T_k.

Indices follow the usual 1-based convention: a cutting point l of sequences
A = (a_1..a_{k+1}) and X = (x_1..x_{k-1}) lies in 1..k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from ladderhv.arrays import Bounds, TwoRowedArray, count_arrays_dp, enumerate_arrays, validate_array
from ladderhv.ladder import LadderRegion


class TheoremViolation(AssertionError):
    """A pair with no allowed cutting point, or a collision of images."""


class CutPair(NamedTuple):
    l: int
    m: int


@dataclass(frozen=True)
class ArrayPair:
    first: TwoRowedArray
    second: TwoRowedArray
    bounds: Bounds
    region: LadderRegion

    def __post_init__(self):
        if len(self.first) != len(self.second) + 2:
            raise ValueError("first member must be exactly two longer than the second")
        for T in (self.first, self.second):
            if not validate_array(T, self.bounds, self.region):
                raise ValueError(f"{T} is not bounded by {self.bounds} or not in the region")

    @property
    def k(self) -> int:
        return len(self.first) - 1


def sequence_cutting_points(A: Sequence[int], X: Sequence[int]) -> list[int]:
    k = len(A) - 1
    if len(X) != k - 1:
        raise ValueError("X must be two shorter than A")
    out = []
    for l in range(1, k + 1):
        # a_l < x_l needs x_l; x_{l-1} < a_{l+1} needs x_{l-1}
        if l <= k - 1 and not A[l - 1] < X[l - 1]:
            continue
        if l >= 2 and not X[l - 2] < A[l]:
            continue
        out.append(l)
    return out


def cut_sequences(A: Sequence[int], X: Sequence[int], l: int) -> tuple[tuple, tuple]:
    if l not in sequence_cutting_points(A, X):
        raise ValueError(f"{l} is not a cutting point of {tuple(A)} and {tuple(X)}")
    A, X = tuple(A), tuple(X)
    return A[:l] + X[l - 1:], X[:l - 1] + A[l:]


def pair_cutting_points(T: ArrayPair) -> list[CutPair]:
    tops = sequence_cutting_points(T.first.top, T.second.top)
    bottoms = sequence_cutting_points(T.first.bottom, T.second.bottom)
    return [CutPair(l, m) for l in tops for m in bottoms]


def apply_cut(T: ArrayPair, c: CutPair) -> tuple[TwoRowedArray, TwoRowedArray]:
    top1, top2 = cut_sequences(T.first.top, T.second.top, c.l)
    bot1, bot2 = cut_sequences(T.first.bottom, T.second.bottom, c.m)
    return TwoRowedArray(top1, bot1), TwoRowedArray(top2, bot2)


def is_allowed(T: ArrayPair, c: CutPair) -> bool:
    S1, S2 = apply_cut(T, c)
    return validate_array(S1, T.bounds, T.region) and validate_array(S2, T.bounds, T.region)


def allowed_cutting_points(T: ArrayPair) -> list[CutPair]:
    return [c for c in pair_cutting_points(T) if is_allowed(T, c)]


TOP_UPPER, TOP_LOWER, BOTTOM_UPPER, BOTTOM_LOWER = "top_upper", "top_lower", "bottom_upper", "bottom_lower"
INEQUALITIES = (TOP_UPPER, TOP_LOWER, BOTTOM_UPPER, BOTTOM_LOWER)


def inequality_holds(T: ArrayPair, interval: tuple[int, int], which: str) -> bool:
    """One of the four boundary inequalities, for every j in [c, d].

    top_upper:    upper(a_j)     >= y_{j-1}
    top_lower:    lower(a_j)     <= y_{j-1}
    bottom_upper: upper(x_{j-1}) >= b_j
    bottom_lower: lower(x_{j-1}) <= b_j
    """
    a, b = T.first.top, T.first.bottom
    x, y = T.second.top, T.second.bottom
    R = T.region
    c, d = interval
    if c <= d and (c < 2 or d > T.k):
        raise ValueError(f"interval [{c},{d}] outside 2..{T.k}")
    for j in range(c, d + 1):
        if which == TOP_UPPER:
            ok = R.high(a[j - 1]) >= y[j - 2]
        elif which == TOP_LOWER:
            ok = R.low(a[j - 1]) <= y[j - 2]
        elif which == BOTTOM_UPPER:
            ok = R.high(x[j - 2]) >= b[j - 1]
        elif which == BOTTOM_LOWER:
            ok = R.low(x[j - 2]) <= b[j - 1]
        else:
            raise ValueError(f"unknown inequality {which!r}")
        if not ok:
            return False
    return True


def cut_interval(c: CutPair) -> tuple[int, int]:
    return (c.l + 1, c.m) if c.l < c.m else (c.m + 1, c.l)


def optimal_cutting_point(T: ArrayPair) -> CutPair:
    allowed = allowed_cutting_points(T)
    if not allowed:
        raise TheoremViolation(f"no allowed cutting point for {T}")
    return min(allowed, key=lambda c: (abs(c.l - c.m), c.l, c.m))


def inject(T: ArrayPair) -> tuple[TwoRowedArray, TwoRowedArray]:
    return apply_cut(T, optimal_cutting_point(T))


@dataclass
class InjectivityReport:
    """Per-k tallies; violations hold (kind, details) tuples."""

    sizes: dict[int, int] = field(default_factory=dict)
    checked: dict[int, int] = field(default_factory=dict)
    violations: list[tuple] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def inequality(self, k: int) -> tuple[int, int]:
        s = self.sizes
        return s.get(k + 1, 0) * s.get(k - 1, 0), s.get(k, 0) ** 2


def _preimage(longer, shorter, bounds, region, image, other):
    """First input (other than `other`) mapping to `image`; used only to report collisions."""
    for T1 in longer:
        for T2 in shorter:
            T = ArrayPair(T1, T2, bounds, region)
            if T != other and allowed_cutting_points(T) and inject(T) == image:
                return T
    return None


def verify_injectivity(region: LadderRegion, bounds: Bounds, k_max: int | None = None,
                       cap: int = 10**7) -> InjectivityReport:
    """Apply the injection to all of T_{k+1} x T_{k-1}, for k = 1..k_max."""
    report = InjectivityReport()
    counts = count_arrays_dp(region, bounds)
    report.sizes = dict(enumerate(counts + [0]))
    top_k = len(counts) - 1 if k_max is None else k_max
    arrays = {k: enumerate_arrays(region, bounds, k) for k in range(min(top_k + 2, len(counts)))}
    for k in range(1, top_k + 1):
        longer, shorter = arrays.get(k + 1, []), arrays.get(k - 1, [])
        if len(longer) * len(shorter) > cap:
            report.skipped.append(k)
            continue
        # images are stored as integers i * N + j indexing into T_k, to keep memory flat
        index = {T: i for i, T in enumerate(arrays.get(k, []))}
        N = len(index)
        seen = set()
        for T1 in longer:
            for T2 in shorter:
                T = ArrayPair(T1, T2, bounds, region)
                try:
                    image = inject(T)
                except TheoremViolation:
                    report.violations.append(("no allowed cut", T))
                    continue
                if image[0] not in index or image[1] not in index:
                    report.violations.append(("image outside T_k x T_k", T, image))
                    continue
                key = index[image[0]] * N + index[image[1]]
                if key in seen:
                    report.violations.append(("collision", T, _preimage(longer, shorter, bounds, region, image, T), image))
                else:
                    seen.add(key)
        report.checked[k] = len(longer) * len(shorter)
    return report


DISJUNCTIONS = ((TOP_UPPER, BOTTOM_UPPER), (TOP_LOWER, BOTTOM_LOWER),
                (TOP_UPPER, TOP_LOWER), (BOTTOM_UPPER, BOTTOM_LOWER))


def _gaps(points: list[int]) -> list[tuple[int, int]]:
    return [(p + 1, q) for p, q in zip(points, points[1:])]


def lemma_violations(T: ArrayPair) -> list[tuple]:
    """Check the interval statements that drive the existence of allowed cuts.

    Between consecutive top (or bottom) cutting points p < q, on [p+1, q]
    at least one inequality of each pair in DISJUNCTIONS holds.  Near the
    ends, top_upper and bottom_lower hold on [2, max(l_min, m_min)] and
    top_lower and bottom_upper hold on [min(l_max, m_max) + 1, k].
    Returns the failing statements (empty when all hold).
    """
    tops = sequence_cutting_points(T.first.top, T.second.top)
    bottoms = sequence_cutting_points(T.first.bottom, T.second.bottom)
    out = []
    for interval in _gaps(tops) + _gaps(bottoms):
        for p, q in DISJUNCTIONS:
            if not (inequality_holds(T, interval, p) or inequality_holds(T, interval, q)):
                out.append((interval, p, q))
    head = (2, max(tops[0], bottoms[0]))
    tail = (min(tops[-1], bottoms[-1]) + 1, T.k)
    for interval, names in ((head, (TOP_UPPER, BOTTOM_LOWER)), (tail, (TOP_LOWER, BOTTOM_UPPER))):
        for name in names:
            if not inequality_holds(T, interval, name):
                out.append((interval, name))
    return out
