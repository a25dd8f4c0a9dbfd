import networkx as nx
import numpy as np
import pytest
from loguru import logger

from snarkforge import CubicGraph, bridges
from snarkforge.Graph import to_nx

RANDOM_ORDERS = [8, 10, 12, 14, 16]


@pytest.fixture(autouse=True)
def quiet_logger():
    """Drop sinks the CLI adds so they don't outlive a captured stream."""
    yield
    logger.remove()
    logger.disable("snarkforge")


def _cubic(n, edges) -> CubicGraph:
    return CubicGraph.from_edges(n, edges)


@pytest.fixture
def k4() -> CubicGraph:
    return _cubic(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def k33() -> CubicGraph:
    return _cubic(6, [(a, b) for a in range(3) for b in range(3, 6)])


@pytest.fixture
def prism() -> CubicGraph:
    return _cubic(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )


@pytest.fixture
def petersen() -> CubicGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return _cubic(10, outer + spokes + inner)


@pytest.fixture
def bridged() -> CubicGraph:
    """Two K4s with a subdivided edge each, joined through the subdivision vertices."""
    left = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]
    right = [(a + 5, b + 5) for a, b in left]
    return _cubic(10, left + right + [(4, 9)])


@pytest.fixture
def two_k4() -> CubicGraph:
    """Two disjoint copies of K4."""
    k = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    return _cubic(8, k + [(a + 4, b + 4) for a, b in k])


@pytest.fixture
def k4_pair() -> CubicGraph:
    """Two K4s minus an edge, joined by two edges: 2-connected with a cyclic 2-cut."""
    side = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    return _cubic(8, side + [(a + 4, b + 4) for a, b in side] + [(0, 4), (1, 5)])


@pytest.fixture
def rng():
    return np.random.default_rng(20230711)


@pytest.fixture
def random_cubic():
    """Factory for connected random cubic graphs, optionally bridgeless."""

    def make(n: int, seed: int, bridgeless: bool = False) -> CubicGraph:
        while True:
            G = nx.random_regular_graph(3, n, seed=seed)
            seed += 1000
            if not nx.is_connected(G):
                continue
            g = CubicGraph.from_edges(n, G.edges())
            if bridgeless and bridges(g):
                continue
            return g

    return make


def automorphism_count(g: CubicGraph) -> int:
    G = to_nx(g)
    return sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(G, G).isomorphisms_iter())

