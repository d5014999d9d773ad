from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from satgraph import embed
from satgraph.construct import CliquePattern
from satgraph.graph import Graph

try:
    from satgraph import _ckernel  # noqa: F401

    KERNELS = ["python", "cython"]
except ImportError:  # pragma: no cover - extension not built
    KERNELS = ["python"]


@pytest.fixture(params=KERNELS)
def kernel(request):
    """Run the test once per available search kernel."""
    before = embed.kernel_name()
    embed.use_kernel(request.param)
    yield request.param
    embed.use_kernel(before)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_permutation(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def patterns(draw, max_total: int = 8, min_size: int = 1) -> CliquePattern:
    sizes = []
    total = 0
    while not sizes or (total < max_total and draw(st.booleans())):
        s = draw(st.integers(min_size, max(min_size, max_total - total)))
        if total + s > max_total and sizes:
            break
        sizes.append(s)
        total += s
    return CliquePattern(sizes)


def all_patterns(max_total: int, min_size: int = 1) -> list[CliquePattern]:
    """Every multiset of clique orders with the given total bound."""
    out = []

    def rec(prefix: list[int], lo: int, room: int) -> None:
        if prefix:
            out.append(CliquePattern(prefix))
        for s in range(lo, room + 1):
            rec(prefix + [s], s, room - s)

    rec([], min_size, max_total)
    return out


# acceptance summary ------------------------------------------------------------

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    k, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[k] = ("PASS" if report.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        verdict, title = _CRITERIA[k]
        terminalreporter.write_line(f"{verdict} criterion {k}: {title}")
