from __future__ import annotations

import pytest

from toricgraph import corpus
from toricgraph.graph import Graph

# filled by tests/test_acceptance.py, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def glued() -> Graph:
    return corpus.GLUED_SQUARES


@pytest.fixture
def k4() -> Graph:
    return corpus.K4


@pytest.fixture
def bowtie() -> Graph:
    return corpus.BOWTIE


@pytest.fixture
def ext_bowtie() -> Graph:
    return corpus.EXTENDED_BOWTIE


@pytest.fixture
def k3() -> Graph:
    return corpus.TRIANGLE


@pytest.fixture
def c4() -> Graph:
    return corpus.SQUARE


@pytest.fixture(scope="session")
def corpus6() -> list[Graph]:
    return corpus.connected_graphs_upto(6)
