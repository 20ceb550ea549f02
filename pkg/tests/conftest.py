import random
import sys
from pathlib import Path

import pytest

from simdim import Graph, is_connected, load_family

DATA = Path(__file__).resolve().parents[1] / "src" / "simdim" / "data"


def random_graph(rng: random.Random, n: int, p: float = 0.5, connected: bool = False) -> Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges, f"R{n}")
        if not connected or is_connected(g):
            return g


def as_pairs(graphs):
    """``(n, edges)`` pairs for the oracles."""
    return [(g.n, g.edges()) for g in graphs]


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def figure1():
    return load_family(DATA / "figure1.txt")


@pytest.fixture(scope="session")
def figure2():
    return load_family(DATA / "figure2.txt")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        RESULTS = module.RESULTS
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
