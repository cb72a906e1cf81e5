from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from binmat.gf2 import GF2Matrix  # noqa: E402
from binmat.matroid import BinaryMatroid  # noqa: E402

settings.register_profile("binmat", deadline=None, derandomize=True, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("binmat")


def pytest_addoption(parser):
    parser.addoption("--binmat-seed", type=int, default=20240101,
                     help="seed for the randomized instance generators")


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--binmat-seed")


@st.composite
def matrices(draw, max_rows=5, max_cols=8, min_cols=0):
    r = draw(st.integers(0, max_rows))
    n = draw(st.integers(min_cols, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=r, max_size=r))
    return GF2Matrix(r, n, tuple(rows))


@st.composite
def matroids(draw, max_rank=4, max_size=7, min_size=0):
    """Random binary matroids with string labels e0, e1, ..."""
    A = draw(matrices(max_rows=max_rank, max_cols=max_size, min_cols=min_size))
    return BinaryMatroid([f"e{i}" for i in range(A.ncols)], A)


# -- acceptance reporting ----------------------------------------------------------

ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def criterion(request):
    """Record a criterion's outcome; the test body calls ``criterion(n, title)``
    first and the result is taken from the test's own pass/fail status."""
    holder = {}

    def start(n: int, title: str) -> None:
        holder["n"], holder["title"] = n, title
        ACCEPTANCE[n] = (title, False)

    yield start
    rep = getattr(request.node, "rep_call", None)
    if "n" in holder:
        ACCEPTANCE[holder["n"]] = (holder["title"], bool(rep and rep.passed))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
