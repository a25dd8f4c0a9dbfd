import networkx as nx
import pytest
from conftest import RANDOM_ORDERS, to_nx

from snarkforge import (
    CubicGraph,
    EdgeCut,
    GraphFormat,
    GraphText,
    MalformedEncoding,
    NotCubic,
    NotSimple,
    bridges,
    components_after_deletion,
    from_adjacency_text,
    from_graph6,
    girth,
    is_connected,
    parse_graph,
    relabel,
    to_adjacency_text,
    to_graph6,
    write_graph,
)
from snarkforge.Graph import has_cycle


def test_k4_graph6(k4):
    assert to_graph6(k4) == "C~"
    assert from_graph6("C~") == k4


def test_graph6_header_and_whitespace(k4):
    assert from_graph6(">>graph6<<C~\n") == k4
    assert from_graph6(b"C~") == k4


def test_path_is_not_cubic():
    with pytest.raises(NotCubic):
        from_graph6("Ch")


@pytest.mark.parametrize("text", ["", "C", "C~~", "C!"])
def test_malformed_graph6(text):
    with pytest.raises(MalformedEncoding):
        from_graph6(text)


def test_petersen_graph6(petersen):
    assert to_graph6(petersen) == "IheA@GUAo"
    assert from_graph6("IheA@GUAo") == petersen


@pytest.mark.parametrize("text", ["IheA@GUAp", "IheA@GUAq", "IheA@GUAv"])
def test_padding_bits_rejected(text):
    with pytest.raises(MalformedEncoding, match="Padding"):
        from_graph6(text)


def test_graph6_from_networkx():
    for n in (16, 22):
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(nx.random_regular_graph(3, n, seed=n).edges())
        text = nx.to_graph6_bytes(G, header=True)
        assert sorted(from_graph6(text).edges) == sorted(tuple(sorted(e)) for e in G.edges())


def test_large_order_prefix():
    n = 64
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, i + n // 2) for i in range(n // 2)]
    g = CubicGraph.from_edges(n, edges)
    text = to_graph6(g)
    assert text[0] == "~"
    assert from_graph6(text) == g


def test_adjacency_text(petersen):
    text = to_adjacency_text(petersen)
    assert text.splitlines()[0] == "0: 1 4 5"
    assert from_adjacency_text(text) == petersen


@pytest.mark.parametrize(
    "text",
    ["0 1 2 3\n", "0: 1 2 x\n", "0: 1 2 3\n0: 1 2 3\n", "1: 0 2 3\n2: 0 1 3\n3: 0 1 2\n4: 0 1 2\n"],
)
def test_bad_adjacency_text(text):
    with pytest.raises(MalformedEncoding):
        from_adjacency_text(text)


def test_parse_and_write_graph(prism):
    for fmt in GraphFormat:
        text = write_graph(prism, fmt)
        assert text.format is fmt
        assert parse_graph(text) == prism
    assert parse_graph(GraphText("graph6", "C~")).n == 4


def test_not_simple():
    with pytest.raises(NotSimple):
        CubicGraph.from_edges(4, [(0, 0), (1, 2), (1, 3), (2, 3)])
    with pytest.raises(NotSimple):
        CubicGraph.from_edges(4, [(0, 1), (1, 0), (0, 2), (0, 3)])


def test_too_small():
    with pytest.raises(NotCubic):
        CubicGraph(2, ((1,), (0,)))


def test_adjacency_rows_checked():
    rows = ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2))
    assert CubicGraph(4, rows).m == 6
    with pytest.raises(MalformedEncoding):
        CubicGraph(4, ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 4)))


def test_edge_lookup(petersen):
    e = petersen.edge_index(7, 5)
    assert petersen.edges[e] == (5, 7)
    assert petersen.other_end(e, 5) == 7
    assert petersen.adjacent(0, 5) and not petersen.adjacent(0, 6)


def test_relabel(petersen, rng):
    perm = rng.permutation(petersen.n)
    h = relabel(petersen, perm)
    assert nx.is_isomorphic(to_nx(petersen), to_nx(h))
    for u, v in petersen.edges:
        assert h.adjacent(int(perm[u]), int(perm[v]))
    with pytest.raises(ValueError):
        relabel(petersen, [0] * petersen.n)


def test_girth(k4, k33, prism, petersen):
    assert girth(k4) == 3
    assert girth(k33) == 4
    assert girth(prism) == 3
    assert girth(petersen) == 5


def test_bridges(bridged, petersen):
    assert bridges(bridged) == frozenset({bridged.edge_index(4, 9)})
    assert bridges(petersen) == frozenset()


@pytest.mark.parametrize("n", RANDOM_ORDERS)
def test_bridges_match_networkx(n, random_cubic):
    g = random_cubic(n, n)
    expected = {g.edge_index(u, v) for u, v in nx.bridges(to_nx(g))}
    assert bridges(g) == expected


def test_components_after_deletion(prism):
    spokes = EdgeCut.of(prism, [prism.edge_index(i, i + 3) for i in range(3)])
    parts = components_after_deletion(prism, spokes)
    assert [sorted(p.vertices) for p in parts] == [[0, 1, 2], [3, 4, 5]]
    assert all(p.has_cycle and p.edge_count == 3 for p in parts)
    for p in parts:
        assert has_cycle(prism, p.vertices, spokes.edges)


def test_components_of_a_tree_side(k4):
    star = EdgeCut.of(k4, [k4.edge_index(1, 2), k4.edge_index(1, 3), k4.edge_index(2, 3)])
    parts = components_after_deletion(k4, star)
    assert len(parts) == 1
    assert not parts[0].has_cycle
    assert not has_cycle(k4, range(4), star.edges)


def test_edge_cut_validation(k4):
    with pytest.raises(ValueError):
        EdgeCut.of(k4, [])
    with pytest.raises(ValueError):
        EdgeCut.of(k4, [6])
    assert EdgeCut.of(k4, [0, 0, 1]).size == 2


def test_is_connected(k4, two_k4):
    assert is_connected(k4)
    assert not is_connected(two_k4)
    assert is_connected(k4, without=0b0011)
