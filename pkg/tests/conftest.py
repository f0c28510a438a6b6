import math
from itertools import product

import pytest

from ehrhart import corpus
from ehrhart.exact import convex_combination
from ehrhart.polytope import contains, dilate


def brute_count(P, t, mode="closed"):
    """Point-by-point scan of the full integer box of tP."""
    Q = dilate(P, t)
    box = [range(math.ceil(lo), math.floor(hi) + 1) for lo, hi in Q.bounding_box()]
    m = "closed" if mode == "closed" else "relative_interior"
    return sum(1 for x in product(*box) if contains(Q, x, m))


def lp_member(P, x):
    return convex_combination(P.vertices, x) is not None


@pytest.fixture(scope="session")
def integral_corpus():
    return corpus.integral_corpus()


@pytest.fixture
def pick_triangle():
    return corpus.pick_triangle()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
