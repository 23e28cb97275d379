import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rigclique import Graph  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run hours-scale reproductions")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="hours-scale; enable with --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_cliques(*sizes: int) -> Graph:
    edges, offset = [], 0
    for s in sizes:
        edges.extend((offset + u, offset + v) for u, v in itertools.combinations(range(s), 2))
        offset += s
    return Graph.from_edges(offset, edges)


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def c5():
    return cycle(5)
