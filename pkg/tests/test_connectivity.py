from itertools import combinations

import networkx as nx
import pytest
from conftest import RANDOM_ORDERS, to_nx

from snarkforge import (
    NO_CYCLIC_CUT,
    ConnectivityClass,
    GenSpec,
    NotTwoConnected,
    components_after_deletion,
    connectivity_class,
    connectivity_report,
    cyclic_edge_connectivity,
    edge_connectivity,
    find_cyclic_cut,
    generate,
    vertex_connectivity,
)


def _cyclic_oracle(G: nx.Graph, cap: int):
    """Smallest cut leaving two components with cycles, by networkx."""
    edges = list(G.edges())
    for size in range(1, cap + 1):
        for cut in combinations(edges, size):
            H = G.copy()
            H.remove_edges_from(cut)
            cyclic = [
                c for c in nx.connected_components(H) if nx.cycle_basis(H.subgraph(c))
            ]
            if len(cyclic) >= 2:
                return size
    return None


def test_petersen(petersen):
    assert vertex_connectivity(petersen) == 3
    assert edge_connectivity(petersen) == 3
    assert cyclic_edge_connectivity(petersen) == 5
    assert cyclic_edge_connectivity(petersen, cap=4) is NO_CYCLIC_CUT
    assert str(NO_CYCLIC_CUT) == "none"
    assert connectivity_class(petersen) is ConnectivityClass.FOUR_PLUS
    assert str(connectivity_class(petersen)) == "4+"


def test_k4_has_no_cyclic_cut(k4, k33):
    assert find_cyclic_cut(k4) is None
    assert find_cyclic_cut(k33) is None
    assert vertex_connectivity(k4) == 3


def test_prism_spokes(prism):
    cut = find_cyclic_cut(prism)
    spokes = {prism.edge_index(i, i + 3) for i in range(3)}
    assert cut.edges == spokes
    assert all(p.has_cycle for p in components_after_deletion(prism, cut))
    assert connectivity_class(prism) is ConnectivityClass.THREE
    assert str(ConnectivityClass.THREE) == "3"


def test_two_cut(k4_pair):
    assert vertex_connectivity(k4_pair) == 2
    assert edge_connectivity(k4_pair) == 2
    assert cyclic_edge_connectivity(k4_pair) == 2
    assert connectivity_class(k4_pair) is ConnectivityClass.TWO


def test_bridged(bridged):
    assert vertex_connectivity(bridged) == 1
    assert edge_connectivity(bridged) == 1
    assert find_cyclic_cut(bridged).edges == {bridged.edge_index(4, 9)}
    with pytest.raises(NotTwoConnected):
        connectivity_class(bridged)


def test_disconnected(two_k4):
    assert vertex_connectivity(two_k4) == 0
    assert edge_connectivity(two_k4) == 0
    with pytest.raises(ValueError):
        find_cyclic_cut(two_k4)
    report = connectivity_report(two_k4)
    assert report.witness_cut is None
    assert report.cyclic_edge_connectivity is NO_CYCLIC_CUT


def test_cap_must_be_positive(k4):
    with pytest.raises(ValueError):
        find_cyclic_cut(k4, cap=0)


def test_report(prism):
    report = connectivity_report(prism)
    assert report.vertex_connectivity == 3
    assert report.edge_connectivity == 3
    assert report.cyclic_edge_connectivity == 3
    assert report.witness_cut.size == 3


def _check_against_networkx(g):
    G = to_nx(g)
    assert vertex_connectivity(g) == nx.node_connectivity(G)
    assert edge_connectivity(g) == nx.edge_connectivity(G)
    assert vertex_connectivity(g) == edge_connectivity(g)


@pytest.mark.parametrize("n", RANDOM_ORDERS)
def test_against_networkx(n, random_cubic):
    for seed in range(3):
        _check_against_networkx(random_cubic(n, 7 * n + seed))


@pytest.mark.slow
@pytest.mark.parametrize("n", RANDOM_ORDERS)
def test_against_networkx_on_a_large_sample(n, random_cubic):
    for seed in range(200):
        _check_against_networkx(random_cubic(n, 9000 * n + seed))


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_vertex_and_edge_connectivity_coincide(n):
    # Cubic graphs have equal vertex and edge connectivity.
    for g in generate(GenSpec(n)):
        assert vertex_connectivity(g) == edge_connectivity(g)


@pytest.mark.parametrize("n", [8, 10, 12])
def test_cyclic_cut_against_oracle(n, random_cubic):
    g = random_cubic(n, 31 * n)
    got = cyclic_edge_connectivity(g, cap=3)
    expected = _cyclic_oracle(to_nx(g), 3)
    assert (None if got is NO_CYCLIC_CUT else got) == expected
