import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from drazinkit.block import BlockInstance
from drazinkit.matrix import Matrix

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


# the worked 4x4 example: BC != 0 but CB = 0
EXAMPLE_A = [[0, 1], [0, 0]]
EXAMPLE_B = [[0, 2], [0, 0]]
EXAMPLE_C = [[0, 1], [0, -1]]
EXAMPLE_D = [[-1, 1], [0, 0]]
EXAMPLE_MD = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 2, -1, 1], [0, 0, 0, 0]]


@pytest.fixture
def example_blocks() -> BlockInstance:
    return BlockInstance(*(Matrix.from_rows(x) for x in (EXAMPLE_A, EXAMPLE_B, EXAMPLE_C, EXAMPLE_D)))


@pytest.fixture
def example_md() -> Matrix:
    return Matrix.from_rows(EXAMPLE_MD)


def gaussian_ints(bound=3, complex_=True):
    re = st.integers(-bound, bound)
    if not complex_:
        return re
    return st.one_of(re, st.builds(complex, re, re))


@st.composite
def matrices(draw, rows=None, cols=None, max_size=4, bound=3, sparse=True):
    """Gaussian-integer matrices; zeros are favoured so singular inputs are common."""
    r = rows if rows is not None else draw(st.integers(1, max_size))
    c = cols if cols is not None else draw(st.integers(1, max_size))
    entry = gaussian_ints(bound)
    if sparse:
        entry = st.one_of(st.just(0), st.just(0), entry)
    return Matrix.from_rows([[draw(entry) for _ in range(c)] for _ in range(r)])


@st.composite
def square_matrices(draw, max_size=4, bound=3):
    n = draw(st.integers(1, max_size))
    return draw(matrices(rows=n, cols=n, bound=bound))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
