import math

import pytest
from hypothesis import strategies as st

from tubular.roots import H, RootIndex
from tubular.slopes import INF, Slope, normalize

ACCEPTANCE_LINES: list[str] = []


@st.composite
def slopes_st(draw, max_abs: int = 60):
    if draw(st.integers(0, 20)) == 0:
        return INF
    b = draw(st.integers(1, max_abs))
    a = draw(st.integers(-max_abs, max_abs))
    return normalize(a, b)


units_st = st.sampled_from(H)


@st.composite
def roots_st(draw, max_abs: int = 30):
    return RootIndex(draw(slopes_st(max_abs)), draw(units_st))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
