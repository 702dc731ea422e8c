import random

import pytest

from iesieve.core import Graph, Matrix01


def random_graph(rng, n, p=0.5):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected_graph(rng, n, p=0.4):
    while True:
        # random spanning tree plus extra edges
        edges = {(rng.randrange(v), v) for v in range(1, n)}
        edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
        return Graph.from_edges(n, sorted(edges))


def random_matrix(rng, n, p=0.5):
    return Matrix01.from_rows([[int(rng.random() < p) for _ in range(n)] for _ in range(n)])


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def g1():
    """Triangle A=0, B=1, C=2 with pendant D=3 attached to A."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


@pytest.fixture
def six_node():
    return Graph.from_edges(6, [(1, 0), (1, 2), (1, 4), (1, 5), (3, 0), (3, 4), (2, 5)])


_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and (report.when == "call" or (report.when == "setup" and report.outcome != "passed")):
        _CRITERIA.append((marker.args[0], marker.args[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_CRITERIA):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {title}")
