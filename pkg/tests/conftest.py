import itertools

import pytest

from genrig.graph import Multigraph
from genrig.search import complete_graph, double_banana

ACCEPTANCE_LINES: list[str] = []


def path_graph(n):
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n):
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture(scope="session")
def banana():
    return double_banana()


def all_simple_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Multigraph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
