import pytest
from hypothesis import given, settings, strategies as st

from conftest import FIG2_M, rect
from ladderhv.hilbert import (HilbertSeries, HVector, binom, h_vector, hilbert_function, hilbert_series,
                              is_log_concave, truncated_numerator)
from ladderhv.ladder import Cogenerator, HypothesisViolation, validate_region

M11 = Cogenerator((1,), (1,))


@pytest.mark.parametrize("n, k, expected", [(5, 2, 10), (3, 4, 0), (-1, 0, 0), (4, -1, 0), (0, 0, 1)])
def test_binom(n, k, expected):
    assert binom(n, k) == expected


def test_h_vectors_of_rectangles():
    assert tuple(h_vector(rect(1, 1), M11)) == (1, 1)
    assert tuple(h_vector(rect(2, 2), M11)) == (1, 4, 1)
    assert tuple(h_vector(rect(1, 1), Cogenerator((2,), (2,)))) == (1,)


def test_series_strings():
    assert str(hilbert_series(rect(1, 1), M11)) == "(1 + z)/(1-z)^3"
    assert str(hilbert_series(rect(2, 2), M11)) == "(1 + 4*z + z^2)/(1-z)^5"
    assert str(hilbert_series(rect(1, 1), Cogenerator((2,), (2,)))) == "(1)/(1-z)^1"


def test_figure2_h_vector(fig2):
    s = hilbert_series(fig2, FIG2_M)
    assert s.denom_exponent == 44
    assert tuple(s.numerator) == (1, 10, 45, 139, 305, 434, 445, 310, 146, 40)
    assert s.numerator.s == 9
    assert is_log_concave(s.numerator)


def test_hilbert_function_values():
    s = HilbertSeries(HVector((1, 1)), 3)
    assert hilbert_function(s, 0) == 1
    assert hilbert_function(s, 1) == 4
    assert hilbert_function(s, 3) == 16
    assert [hilbert_function(s, ell) for ell in range(1, 7)] == [(ell + 1) ** 2 for ell in range(1, 7)]


def test_hilbert_function_degree_zero_series():
    s = HilbertSeries(HVector((1, 2)), 0)
    assert [hilbert_function(s, ell) for ell in range(3)] == [1, 2, 0]


@pytest.mark.parametrize("h, expected", [((1, 4, 1), True), ((1, 4, 2, 4), False), ((1,), True), ((1, 7), True)])
def test_log_concave(h, expected):
    assert is_log_concave(h) is expected


def test_hvector_trims_trailing_zeros():
    assert HVector((1, 3, 0, 0)).coeffs == (1, 3)
    assert HVector((1,)).s == 0


@st.composite
def instances(draw):
    a, b = draw(st.integers(1, 5)), draw(st.integers(1, 5))
    lower = sorted(draw(st.lists(st.integers(0, b), min_size=a + 1, max_size=a + 1)))
    upper = sorted(draw(st.lists(st.integers(0, b), min_size=a + 1, max_size=a + 1)))
    lower[0], upper[-1] = 0, b
    R = validate_region(a, b, lower, [max(p, q) for p, q in zip(lower, upper)])
    n = draw(st.integers(1, 2))
    u = tuple(sorted(draw(st.lists(st.integers(1, b + 1), min_size=n, max_size=n, unique=True))))
    v = tuple(sorted(draw(st.lists(st.integers(1, a + 1), min_size=n, max_size=n, unique=True))))
    return R, Cogenerator(u, v)


@settings(max_examples=60)
@given(instances(), st.integers(0, 20))
def test_truncated_series_identity(inst, max_ell):
    try:
        s = hilbert_series(*inst)
    except HypothesisViolation:
        return
    expected = list(s.numerator)[:max_ell + 1]
    expected += [0] * (max_ell + 1 - len(expected))
    assert truncated_numerator(s, max_ell) == expected
    assert s.numerator[0] == 1


@settings(max_examples=60)
@given(instances())
def test_single_minor_log_concave(inst):
    R, M = inst
    M = Cogenerator(M.u[:1], M.v[:1])
    try:
        h = h_vector(R, M)
    except HypothesisViolation:
        return
    assert is_log_concave(h)
