import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tieentropy.graph import Graph  # noqa: E402

# Labels follow the worked example; id 0 is unused padding.
FIG1_EDGES = [(1, 2), (1, 3), (1, 4), (2, 5), (3, 7), (6, 7)]


@pytest.fixture
def fig1():
    return Graph(8, FIG1_EDGES)


@pytest.fixture
def k3():
    return Graph(3, [(0, 1), (0, 2), (1, 2)])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
