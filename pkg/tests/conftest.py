import sys
from pathlib import Path

import pytest

from gsierpinski import BaseGraph, SierpinskiParams, parse_edge_list
from gsierpinski.corpus import complete, path, star

sys.path.insert(0, str(Path(__file__).parent))

C4_TEXT = "4 4\n1 2\n2 3\n3 4\n4 1\n"


@pytest.fixture
def c4():
    return parse_edge_list(C4_TEXT)


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def k2():
    return complete(2)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def star3():
    return star(3)


@pytest.fixture
def k2_plus_isolated():
    return BaseGraph.from_edges(3, [(0, 1)])


@pytest.fixture
def params():
    """Factory: params(graph, t, cap=...)."""
    return lambda graph, t, **kw: SierpinskiParams(graph, t, **kw)


ACCEPTANCE_LINES = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        doc = report.nodeid.split("::")[-1]
        ACCEPTANCE_LINES.append(f"{'PASS' if report.passed else 'FAIL'}  {doc}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
