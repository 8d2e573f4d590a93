"""h-vectors and Hilbert series of ladder determinantal rings."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from ladderhv.arrays import count_arrays_dp, count_families_dp, trim
from ladderhv.ladder import Cogenerator, LadderRegion, PathSystemData, derive_path_system


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero when k < 0 or n < k (n may be negative)."""
    if k < 0 or n < k:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class HVector:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(trim(list(self.coeffs)) if self.coeffs else (0,)))

    @property
    def s(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)


@dataclass(frozen=True)
class HilbertSeries:
    numerator: HVector
    denom_exponent: int

    def __str__(self):
        terms = []
        for i, c in enumerate(self.numerator):
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        num = " + ".join(terms) or "0"
        return f"({num})/(1-z)^{self.denom_exponent}"


def h_vector_from_psd(psd: PathSystemData) -> HVector:
    if psd.n == 1:
        return HVector(tuple(count_arrays_dp(psd.counting_region(0), psd.bounds(0))))
    return HVector(tuple(count_families_dp(psd)))


def h_vector(region: LadderRegion, M: Cogenerator) -> HVector:
    return h_vector_from_psd(derive_path_system(region, M))


def hilbert_series(region: LadderRegion, M: Cogenerator) -> HilbertSeries:
    psd = derive_path_system(region, M)
    return HilbertSeries(h_vector_from_psd(psd), psd.d)


def hilbert_function(series: HilbertSeries, ell: int) -> int:
    d = series.denom_exponent
    h = series.numerator.coeffs
    if d == 0:
        return h[ell] if ell < len(h) else 0
    return sum(hm * binom(d + ell - m - 1, d - 1) for m, hm in enumerate(h))


def is_log_concave(h) -> bool:
    h = list(h)
    return all(h[i - 1] * h[i + 1] <= h[i] * h[i] for i in range(1, len(h) - 1))


def truncated_numerator(series: HilbertSeries, max_ell: int) -> list[int]:
    """Coefficients of (sum_{l<=max_ell} H(l) z^l) * (1-z)^d mod z^(max_ell+1)."""
    values = [hilbert_function(series, ell) for ell in range(max_ell + 1)]
    d = series.denom_exponent
    factor = [(-1) ** j * binom(d, j) for j in range(min(d, max_ell) + 1)]
    return [sum(factor[j] * values[i - j] for j in range(len(factor)) if j <= i)
            for i in range(max_ell + 1)]
