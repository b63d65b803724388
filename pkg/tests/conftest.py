import math
import sys

import pytest

from wonglab import catalog as cat
from wonglab.spectral_grid import make_grid

EXPONENTS = (1, 2, math.inf)


@pytest.fixture(scope="session")
def grid():
    return make_grid(1, 4096, 40.0)


@pytest.fixture(scope="session")
def small_grid():
    return make_grid(1, 256, 40.0)


@pytest.fixture(scope="session")
def grid2d():
    return make_grid(2, 128, 40.0)


@pytest.fixture(scope="session")
def named(grid):
    return cat.catalog(grid)


@pytest.fixture(scope="session")
def full_catalog(grid):
    return cat.catalog(grid, random_count=40)


@pytest.fixture(scope="session")
def gaussian(grid):
    return cat.named_field("gaussian", grid)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
