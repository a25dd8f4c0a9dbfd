from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .Connectivity import vertex_connectivity
from .Graph import CubicGraph, bridges, girth

_ALL_COLORS = 0b111
_AVAILABLE = [bin(_ALL_COLORS & ~used).count("1") for used in range(8)]


@dataclass(frozen=True)
class EdgeColoring:
    """Assignment of a colour in {0, 1, 2} to each edge.

    Attributes:
        colors (Tuple[int, ...]): Colour of each edge by edge index, -1 if uncoloured.
        complete (bool): Whether every edge is coloured.
    """

    colors: Tuple[int, ...]
    complete: bool


def verify_coloring(g: CubicGraph, coloring: EdgeColoring) -> bool:
    """Check that every vertex sees each of the three colours exactly once."""
    if len(coloring.colors) != g.m:
        return False
    return all(
        sorted(coloring.colors[e] for e in g.incidence[v]) == [0, 1, 2]
        for v in range(g.n)
    )


def find_three_edge_coloring(
    g: CubicGraph, symmetry_breaking: bool = True
) -> Optional[EdgeColoring]:
    """Search for a proper 3-edge-colouring by backtracking.

    The next edge is always the uncoloured one with the fewest colours left
    (lowest index on ties) and colours are tried in the order 0, 1, 2.

    Args:
        g (CubicGraph): Graph to colour.
        symmetry_breaking (bool, optional): Fix the colours of the three edges at
            vertex 0 to 0, 1, 2. Doesn't change the answer. Defaults to True.

    Returns:
        Optional[EdgeColoring]: A complete colouring, or None if g is not 3-edge-colourable.
    """
    colors: List[int] = [-1] * g.m
    used: List[int] = [0] * g.n

    def paint(e: int, c: int):
        u, v = g.edges[e]
        colors[e] = c
        used[u] |= 1 << c
        used[v] |= 1 << c

    def scrape(e: int):
        u, v = g.edges[e]
        c = colors[e]
        colors[e] = -1
        used[u] &= ~(1 << c)
        used[v] &= ~(1 << c)

    if symmetry_breaking:
        for c, e in enumerate(g.incidence[0]):
            paint(e, c)

    def most_constrained() -> int:
        best, best_free = -1, 4
        for e, c in enumerate(colors):
            if c >= 0:
                continue
            u, v = g.edges[e]
            free = _AVAILABLE[used[u] | used[v]]
            if free < best_free:
                best, best_free = e, free
                if free == 0:
                    break
        return best

    def search() -> bool:
        e = most_constrained()
        if e < 0:
            return True
        u, v = g.edges[e]
        blocked = used[u] | used[v]
        for c in range(3):
            if blocked >> c & 1:
                continue
            paint(e, c)
            if search():
                return True
            scrape(e)
        return False

    if not search():
        return None
    return EdgeColoring(tuple(colors), True)


def chromatic_index(g: CubicGraph) -> int:
    """3 if g is 3-edge-colourable, otherwise 4."""
    return 3 if find_three_edge_coloring(g) is not None else 4


def is_snark(g: CubicGraph, min_girth: int = 4) -> bool:
    """Whether g is a 2-connected, bridgeless, uncolourable cubic graph of girth >= min_girth.

    Args:
        g (CubicGraph): Candidate graph.
        min_girth (int, optional): Girth lower bound. Defaults to 4.

    Returns:
        bool: True if g is a snark in the sense of the published tables.
    """
    if girth(g) < min_girth or bridges(g):
        return False
    if chromatic_index(g) != 4:
        return False
    return vertex_connectivity(g) >= 2
