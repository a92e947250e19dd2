import json
import sys
from pathlib import Path

import pytest

from lcmlat import Labeling, Monomial, Tree, from_hasse

TESTS = Path(__file__).resolve().parent
ROOT = TESTS.parent
DATA = ROOT / "data"
sys.path.insert(0, str(TESTS / "oracles"))

EXAMPLE_EDGES = [[1, 3], [2, 3], [3, 4], [4, 5]]
EXAMPLE_MT = "(x1y2x3x4, y1x2x3x4, y1y2x3x4, y1y2y3x4, y1y2y3y4)"


@pytest.fixture(scope="session")
def frozen():
    return json.loads((TESTS / "data" / "frozen.json").read_text())


@pytest.fixture(scope="session")
def example_tree():
    return Tree.from_edges(EXAMPLE_EDGES)


def lattice16_setup():
    data = json.loads((DATA / "x_labeled16.json").read_text())
    P, node = from_hasse([tuple(c) for c in data["covers"]])
    labels = {node[int(k)]: Monomial(v) for k, v in data["labels"].items()}
    return P, node, Labeling.build(P, labels, ["x"])


@pytest.fixture(scope="session")
def lattice16():
    return lattice16_setup()


def tree_placement_setup():
    data = json.loads((DATA / "tree_placement.json").read_text())
    P, node = from_hasse([tuple(c) for c in data["covers"]])
    return P, node, data["labels"]


@pytest.fixture(scope="session")
def tree_placement():
    return tree_placement_setup()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
