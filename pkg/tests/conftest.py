from pathlib import Path

import pytest

from ladderhv.ladder import Cogenerator, derive_path_system, validate_region

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

FIG2_LOWER = (0, 0, 0, 0, 0, 2, 3, 7, 7)
FIG2_UPPER = (3, 3, 7, 7, 8, 9, 9, 9, 9)
FIG2_M = Cogenerator((1, 3, 4), (1, 2, 4))
FIG2B_FACE = [(6, 8), (2, 7), (3, 6), (6, 6), (2, 5), (5, 8), (4, 5), (3, 3), (1, 2), (2, 1), (3, 1)]


def rect(a, b):
    return validate_region(a, b, [0] * (a + 1), [b] * (a + 1))


@pytest.fixture
def fig2():
    return validate_region(8, 9, FIG2_LOWER, FIG2_UPPER)


@pytest.fixture
def fig2_psd(fig2):
    return derive_path_system(fig2, FIG2_M)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
