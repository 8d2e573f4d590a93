"""Hilbert series, h-vectors and log-concavity for ladder determinantal rings,
computed from two-rowed arrays and non-intersecting lattice paths."""

from ladderhv.arrays import Bounds, TwoRowedArray, count_arrays_dp, enumerate_arrays
from ladderhv.hilbert import HilbertSeries, HVector, h_vector, hilbert_function, hilbert_series, is_log_concave
from ladderhv.ladder import Cogenerator, LadderRegion, Point, derive_path_system, validate_region

__all__ = [
    "Bounds", "Cogenerator", "HVector", "HilbertSeries", "LadderRegion", "Point", "TwoRowedArray",
    "count_arrays_dp", "derive_path_system", "enumerate_arrays", "h_vector", "hilbert_function",
    "hilbert_series", "is_log_concave", "validate_region",
]
