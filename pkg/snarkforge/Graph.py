from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

import networkx as nx

Edge = Tuple[int, int]

GRAPH6_HEADER = b">>graph6<<"


class GraphFormatError(Exception):
    """Base class for graph text that can't be turned into a cubic graph."""

    def __init__(self, message="Invalid graph."):
        self.message = message
        super().__init__(self.message)


class MalformedEncoding(GraphFormatError):
    """Raised when the bytes of a graph6 or adjacency-list payload are invalid."""

    def __init__(self, message="Malformed graph encoding."):
        super().__init__(message)


class NotCubic(GraphFormatError):
    """Raised when a vertex does not have degree exactly 3."""

    def __init__(self, message="Graph is not cubic."):
        super().__init__(message)


class NotSimple(GraphFormatError):
    """Raised when a graph has a loop or a repeated edge."""

    def __init__(self, message="Graph is not simple."):
        super().__init__(message)


class GraphFormat(str, Enum):
    GRAPH6 = "graph6"
    ADJACENCY = "adjacency-list"


@dataclass(frozen=True)
class GraphText:
    """A serialized graph.

    Attributes:
        format (GraphFormat): Either graph6 or the 'v: a b c' adjacency-list text.
        payload (bytes): The encoded graph.
    """

    format: GraphFormat
    payload: bytes

    def __post_init__(self):
        object.__setattr__(self, "format", GraphFormat(self.format))
        if isinstance(self.payload, str):
            object.__setattr__(self, "payload", self.payload.encode("ascii"))


@dataclass(frozen=True)
class CubicGraph:
    """Immutable simple cubic graph on vertices 0..n-1.

    Neighbour lists are kept sorted so iteration order is deterministic, and
    each vertex also carries a bitset of its neighbours for fast membership
    and intersection tests.

    Attributes:
        n (int): Number of vertices.
        adjacency (Tuple[Tuple[int, int, int], ...]): Sorted neighbours of each vertex.
        edges (Tuple[Edge, ...]): Edges (u, v) with u < v, sorted. Derived.
        incidence (Tuple[Tuple[int, int, int], ...]): Indices of the edges at each vertex. Derived.
        masks (Tuple[int, ...]): Neighbour bitset of each vertex. Derived.
    """

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    edges: Tuple[Edge, ...] = field(init=False, repr=False, compare=False)
    incidence: Tuple[Tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False
    )
    masks: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    _edge_ids: Dict[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 4:
            raise NotCubic(f"A cubic graph needs at least 4 vertices, got {self.n}.")
        if self.n != len(self.adjacency):
            raise MalformedEncoding(
                f"Expected {self.n} adjacency rows, got {len(self.adjacency)}."
            )
        adjacency = []
        for v, nbrs in enumerate(self.adjacency):
            nbrs = tuple(sorted(int(w) for w in nbrs))
            if any(w < 0 or w >= self.n for w in nbrs):
                raise MalformedEncoding(f"Vertex {v} has a neighbour out of range.")
            if v in nbrs:
                raise NotSimple(f"Vertex {v} has a loop.")
            if len(set(nbrs)) != len(nbrs):
                raise NotSimple(f"Vertex {v} has a repeated neighbour.")
            if len(nbrs) != 3:
                raise NotCubic(f"Vertex {v} has degree {len(nbrs)}.")
            adjacency.append(nbrs)
        for v, nbrs in enumerate(adjacency):
            for w in nbrs:
                if v not in adjacency[w]:
                    raise MalformedEncoding(f"Edge {v}-{w} is not symmetric.")

        edges = tuple(sorted((v, w) for v, nbrs in enumerate(adjacency) for w in nbrs if v < w))
        edge_ids = {e: i for i, e in enumerate(edges)}
        incidence = tuple(
            tuple(edge_ids[(min(v, w), max(v, w))] for w in nbrs)
            for v, nbrs in enumerate(adjacency)
        )
        masks = tuple(sum(1 << w for w in nbrs) for nbrs in adjacency)

        object.__setattr__(self, "adjacency", tuple(adjacency))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_edge_ids", edge_ids)
        object.__setattr__(self, "incidence", incidence)
        object.__setattr__(self, "masks", masks)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> CubicGraph:
        """Build a cubic graph from an edge list.

        Args:
            n (int): Number of vertices.
            edges (Iterable[Sequence[int]]): Pairs of vertex indices.

        Raises:
            NotSimple: A loop or a parallel edge is present.
            NotCubic: Some vertex doesn't have degree 3.

        Returns:
            CubicGraph: The validated graph.
        """
        adjacency: List[List[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise NotSimple(f"Vertex {u} has a loop.")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise NotSimple(f"Edge {key[0]}-{key[1]} appears twice.")
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedEncoding(f"Edge {u}-{v} is out of range.")
            seen.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        return cls(n, tuple(tuple(a) for a in adjacency))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edge_index(self, u: int, v: int) -> int:
        return self._edge_ids[(min(u, v), max(u, v))]

    def other_end(self, edge: int, v: int) -> int:
        a, b = self.edges[edge]
        return b if a == v else a


@dataclass(frozen=True)
class EdgeCut:
    """A set of edges of a host graph.

    Attributes:
        edges (FrozenSet[int]): Edge indices.
    """

    edges: FrozenSet[int]

    @classmethod
    def of(cls, g: CubicGraph, edges: Iterable[int]) -> EdgeCut:
        edges = frozenset(int(e) for e in edges)
        if not edges:
            raise ValueError("An edge cut needs at least one edge.")
        if any(e < 0 or e >= g.m for e in edges):
            raise ValueError(f"Edge index out of range for a graph with {g.m} edges.")
        return cls(edges)

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Component:
    """Connected component left after deleting edges.

    Attributes:
        vertices (FrozenSet[int]): Vertices of the component.
        edge_count (int): Surviving edges with both ends in the component.
        has_cycle (bool): True iff the component is not a tree.
    """

    vertices: FrozenSet[int]
    edge_count: int
    has_cycle: bool


def _decode_order(data: bytes) -> Tuple[int, int]:
    if not data:
        raise MalformedEncoding("Empty graph6 string.")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        groups, offset = data[2:8], 8
    else:
        groups, offset = data[1:4], 4
    if len(groups) not in (3, 6):
        raise MalformedEncoding("Truncated graph6 order field.")
    n = 0
    for b in groups:
        n = (n << 6) | (b - 63)
    return n, offset


def to_nx(g: CubicGraph) -> nx.Graph:
    """Copy a cubic graph into networkx with nodes inserted in order 0..n-1."""
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def to_graph6(g: CubicGraph) -> str:
    """Encode a graph as a header-free graph6 string.

    Args:
        g (CubicGraph): Graph to encode.

    Returns:
        str: The graph6 text, no trailing newline.
    """
    return nx.to_graph6_bytes(to_nx(g), header=False).rstrip(b"\n").decode("ascii")


def from_graph6(text: Union[str, bytes]) -> CubicGraph:
    """Decode a graph6 string, with or without the '>>graph6<<' header.

    Args:
        text (Union[str, bytes]): graph6 text.

    Raises:
        MalformedEncoding: Bytes outside the graph6 alphabet, a length
            mismatch, or set padding bits in the last byte.
        NotCubic: The decoded graph isn't 3-regular.

    Returns:
        CubicGraph: The decoded graph, vertex order preserved.
    """
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER) :]
    if any(b < 63 or b > 126 for b in data):
        raise MalformedEncoding("Byte outside the graph6 range 63..126.")

    n, offset = _decode_order(data)
    body = data[offset:]
    n_bits = n * (n - 1) // 2
    if len(body) != -(-n_bits // 6):
        raise MalformedEncoding(
            f"Expected {-(-n_bits // 6)} data bytes for {n} vertices, got {len(body)}."
        )
    pad = (-n_bits) % 6
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise MalformedEncoding(
            f"Padding bits set in the last of {len(body)} data bytes."
        )

    try:
        G = nx.from_graph6_bytes(data)
    except (ValueError, nx.NetworkXError) as e:
        raise MalformedEncoding(str(e)) from e
    return CubicGraph.from_edges(n, G.edges())


def to_adjacency_text(g: CubicGraph) -> str:
    return "".join(
        f"{v}: {' '.join(str(w) for w in nbrs)}\n" for v, nbrs in enumerate(g.adjacency)
    )


def from_adjacency_text(text: Union[str, bytes]) -> CubicGraph:
    """Parse 'v: a b c' lines (0-based) into a cubic graph."""
    text = text.decode("ascii") if isinstance(text, bytes) else text
    rows: Dict[int, Tuple[int, ...]] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise MalformedEncoding(f"Missing ':' in line '{line}'.")
        try:
            v = int(head)
            nbrs = tuple(int(w) for w in tail.split())
        except ValueError as e:
            raise MalformedEncoding(f"Non-integer vertex in line '{line}'.") from e
        if v in rows:
            raise MalformedEncoding(f"Vertex {v} listed twice.")
        rows[v] = nbrs

    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise MalformedEncoding("Vertices must be numbered 0..n-1.")
    return CubicGraph(n, tuple(rows[v] for v in range(n)))


def parse_graph(text: GraphText) -> CubicGraph:
    """Parse serialized graph text into a validated cubic graph.

    Args:
        text (GraphText): The format and payload.

    Returns:
        CubicGraph: The parsed graph.
    """
    if text.format is GraphFormat.GRAPH6:
        return from_graph6(text.payload)
    return from_adjacency_text(text.payload)


def write_graph(g: CubicGraph, format: GraphFormat = GraphFormat.GRAPH6) -> GraphText:
    format = GraphFormat(format)
    if format is GraphFormat.GRAPH6:
        return GraphText(format, to_graph6(g).encode("ascii"))
    return GraphText(format, to_adjacency_text(g).encode("ascii"))


def relabel(g: CubicGraph, perm: Sequence[int]) -> CubicGraph:
    """Relabel vertex v as perm[v].

    Args:
        g (CubicGraph): Graph to relabel.
        perm (Sequence[int]): A permutation of 0..n-1.

    Returns:
        CubicGraph: The relabeled graph.
    """
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of the vertex set.")
    return CubicGraph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def girth(g: CubicGraph) -> int:
    """Length of a shortest cycle, by a breadth-first search from every vertex.

    Args:
        g (CubicGraph): Graph to measure.

    Returns:
        int: The girth, between 3 and n.
    """
    best = g.n + 1
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def bridges(g: CubicGraph) -> FrozenSet[int]:
    """Indices of the cut-edges, found with an iterative low-link search.

    Args:
        g (CubicGraph): Graph to inspect.

    Returns:
        FrozenSet[int]: Bridge edge indices; empty iff g is bridgeless.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    found = set()
    clock = 0
    for start in range(g.n):
        if disc[start] >= 0:
            continue
        disc[start] = low[start] = clock
        clock += 1
        # (vertex, edge used to enter it, position in its incidence list)
        stack = [(start, -1, 0)]
        while stack:
            v, via, i = stack.pop()
            if i < 3:
                stack.append((v, via, i + 1))
                e = g.incidence[v][i]
                if e == via:
                    continue
                w = g.other_end(e, v)
                if disc[w] < 0:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, 0))
                else:
                    low[v] = min(low[v], disc[w])
            elif via >= 0:
                parent = g.other_end(via, v)
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    found.add(via)
    return frozenset(found)


def components_after_deletion(g: CubicGraph, cut: EdgeCut) -> List[Component]:
    """Connected components of g once the cut edges are removed.

    Args:
        g (CubicGraph): Host graph.
        cut (EdgeCut): Edges to delete.

    Returns:
        List[Component]: Components ordered by their smallest vertex, each flagged
            with whether it still contains a cycle.
    """
    removed = cut.edges
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        members = [start]
        degree_sum = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for e, w in zip(g.incidence[v], g.adjacency[v]):
                if e in removed:
                    continue
                degree_sum += 1
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    queue.append(w)
        edge_count = degree_sum // 2
        components.append(
            Component(frozenset(members), edge_count, edge_count >= len(members))
        )
    return components


def has_cycle(g: CubicGraph, vertices: Iterable[int], removed: FrozenSet[int] = frozenset()) -> bool:
    """Depth-first cycle detection on the subgraph induced by vertices minus removed edges."""
    inside = set(vertices)
    seen = set()
    for start in inside:
        if start in seen:
            continue
        seen.add(start)
        stack = [(start, -1)]
        while stack:
            v, via = stack.pop()
            for e, w in zip(g.incidence[v], g.adjacency[v]):
                if e == via or e in removed or w not in inside:
                    continue
                if w in seen:
                    return True
                seen.add(w)
                stack.append((w, e))
    return False


def is_connected(g: CubicGraph, without: int = 0) -> bool:
    """Whether g stays connected after deleting the vertices in the bitset `without`."""
    alive = ((1 << g.n) - 1) & ~without
    if not alive:
        return True
    reached = alive & -alive
    frontier = reached
    while frontier:
        grown = 0
        while frontier:
            low = frontier & -frontier
            grown |= g.masks[low.bit_length() - 1]
            frontier ^= low
        frontier = grown & alive & ~reached
        reached |= frontier
    return reached == alive
