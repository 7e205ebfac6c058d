import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from compactify import build_root_system, parse_group  # noqa: E402


def fw(rank, **coeffs):
    """Weight from keyword coefficients, e.g. fw(3, w2=1, w3=2)."""
    out = [0] * rank
    for key, c in coeffs.items():
        out[int(key[1:]) - 1] = c
    return tuple(out)


@pytest.fixture
def group():
    return parse_group


@pytest.fixture
def roots():
    return build_root_system


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
