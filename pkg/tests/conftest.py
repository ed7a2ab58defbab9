"""Pytest configuration and fixtures."""

import tempfile
from collections.abc import Callable
from pathlib import Path

import networkx as nx
import pytest

from tpconn.models.coloring import ConnectionMode, PathWitness, TotalColoring
from tpconn.models.graph import Graph
from tpconn.services.paths import is_proper_path

DATA_DIR = Path(__file__).parent / "data"


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges(m + n, [(a, m + b) for a in range(m) for b in range(n)])


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def c4() -> Graph:
    return cycle(4)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def p4() -> Graph:
    return path(4)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def star3() -> Graph:
    """``K_{1,3}`` with center 0."""
    return star(3)


@pytest.fixture
def k23() -> Graph:
    return complete_bipartite(2, 3)


@pytest.fixture
def bowtie() -> Graph:
    """Two triangles sharing vertex 2."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def lollipop() -> Graph:
    """A 4-cycle 0-1-2-3 with the pendant path 3-4-5."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (4, 5)])


@pytest.fixture
def petersen() -> Graph:
    graph, _ = Graph.from_networkx(nx.petersen_graph())
    return graph


def oracle_connected(g: Graph, c: TotalColoring, mode: ConnectionMode = ConnectionMode.TPC) -> bool:
    """Brute force: every pair has some simple path satisfying ``mode``."""
    graph = g.to_networkx()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not any(
                is_proper_path(g, c, PathWitness.of(p), mode) for p in nx.all_simple_paths(graph, u, v)
            ):
                return False
    return True


@pytest.fixture
def oracle() -> Callable[..., bool]:
    """The all-simple-paths reference verdict."""
    return oracle_connected
