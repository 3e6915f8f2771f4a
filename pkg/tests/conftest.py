import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from convexreps.convex import validate_convex  # noqa: E402

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def convex_sets(draw, min_size=1, max_size=10, max_denominator=6):
    """Start point plus strictly increasing positive rational gaps."""
    n = draw(st.integers(min_size, max_size))
    start = draw(st.fractions(min_value=-20, max_value=20, max_denominator=max_denominator))
    increments = draw(
        st.lists(
            st.fractions(min_value=Fraction(1, max_denominator), max_value=4, max_denominator=max_denominator),
            min_size=max(n - 1, 0),
            max_size=max(n - 1, 0),
        )
    )
    xs, gap = [start], Fraction(0)
    for inc in increments:
        gap += inc
        xs.append(xs[-1] + gap)
    return validate_convex(xs)


@st.composite
def integer_convex_sets(draw, min_size=1, max_size=10):
    """Small integer gaps so that repeated differences are common."""
    n = draw(st.integers(min_size, max_size))
    incs = draw(st.lists(st.integers(1, 3), min_size=max(n - 1, 0), max_size=max(n - 1, 0)))
    xs, gap = [0], 0
    for inc in incs:
        gap += inc
        xs.append(xs[-1] + gap)
    return validate_convex(xs)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
