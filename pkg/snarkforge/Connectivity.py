from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from itertools import combinations
from typing import Optional, Union

from .Graph import CubicGraph, EdgeCut, components_after_deletion, girth, is_connected


class NotTwoConnected(Exception):
    """Raised when a connectivity class is requested for a graph that isn't 2-connected."""

    def __init__(self, message="Graph is not 2-connected."):
        self.message = message
        super().__init__(self.message)


class NoCyclicCut(Enum):
    """No cycle-separating edge cut exists up to the requested size."""

    NONE = "none"

    def __str__(self) -> str:
        return self.value


NO_CYCLIC_CUT = NoCyclicCut.NONE


class ConnectivityClass(IntEnum):
    """Connectivity columns of the snark count tables."""

    TWO = 2
    THREE = 3
    FOUR_PLUS = 4

    def __str__(self) -> str:
        return "4+" if self is ConnectivityClass.FOUR_PLUS else str(int(self))


@dataclass(frozen=True)
class ConnectivityReport:
    """Connectivity numbers of a cubic graph.

    Attributes:
        vertex_connectivity (int): Fewest vertices whose removal disconnects the graph, at most 3.
        edge_connectivity (int): Fewest edges whose removal disconnects the graph, at most 3.
        cyclic_edge_connectivity (Union[int, NoCyclicCut]): Size of a smallest cycle-separating cut.
        witness_cut (Optional[EdgeCut]): A cut of that size, if one was found.
    """

    vertex_connectivity: int
    edge_connectivity: int
    cyclic_edge_connectivity: Union[int, NoCyclicCut]
    witness_cut: Optional[EdgeCut]


def vertex_connectivity(g: CubicGraph) -> int:
    """Vertex connectivity by trying every single vertex, then every pair.

    Args:
        g (CubicGraph): Graph to test.

    Returns:
        int: 0 if disconnected, else 1, 2 or 3.
    """
    if not is_connected(g):
        return 0
    if any(not is_connected(g, 1 << v) for v in range(g.n)):
        return 1
    if any(not is_connected(g, (1 << u) | (1 << v)) for u, v in combinations(range(g.n), 2)):
        return 2
    return 3


def _disconnects(g: CubicGraph, edges) -> bool:
    return len(components_after_deletion(g, EdgeCut(frozenset(edges)))) > 1


def edge_connectivity(g: CubicGraph) -> int:
    """Edge connectivity by brute force over cuts of at most two edges."""
    if not is_connected(g):
        return 0
    for size in (1, 2):
        if any(_disconnects(g, cut) for cut in combinations(range(g.m), size)):
            return size
    return 3


def find_cyclic_cut(g: CubicGraph, cap: Optional[int] = None) -> Optional[EdgeCut]:
    """Smallest edge cut leaving two components that both contain a cycle.

    Cuts are enumerated by size 1..cap, and within a size in lexicographic
    order of edge indices, so the witness is deterministic.

    Args:
        g (CubicGraph): A connected cubic graph.
        cap (Optional[int], optional): Largest cut size to try. Defaults to the girth of g.

    Returns:
        Optional[EdgeCut]: The first smallest cyclic cut, or None if there is none up to cap.
    """
    if not is_connected(g):
        raise ValueError("Cyclic edge-connectivity needs a connected graph.")
    cap = girth(g) if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be at least 1.")
    for size in range(1, cap + 1):
        for edges in combinations(range(g.m), size):
            cut = EdgeCut(frozenset(edges))
            parts = components_after_deletion(g, cut)
            if sum(part.has_cycle for part in parts) >= 2:
                return cut
    return None


def cyclic_edge_connectivity(
    g: CubicGraph, cap: Optional[int] = None
) -> Union[int, NoCyclicCut]:
    """Cyclic edge-connectivity of g, or NO_CYCLIC_CUT if no cyclic cut has size <= cap."""
    cut = find_cyclic_cut(g, cap)
    return NO_CYCLIC_CUT if cut is None else cut.size


def connectivity_class(g: CubicGraph) -> ConnectivityClass:
    """Table column for a snark: cyclic connectivity 2, 3, or 4 and above.

    Args:
        g (CubicGraph): A 2-connected cubic graph.

    Raises:
        NotTwoConnected: g has a cut vertex or is disconnected.

    Returns:
        ConnectivityClass: TWO, THREE or FOUR_PLUS.
    """
    if vertex_connectivity(g) < 2:
        raise NotTwoConnected()
    value = cyclic_edge_connectivity(g, cap=3)
    if value is NO_CYCLIC_CUT:
        return ConnectivityClass.FOUR_PLUS
    return ConnectivityClass(value)


def connectivity_report(g: CubicGraph, cap: Optional[int] = None) -> ConnectivityReport:
    cut = find_cyclic_cut(g, cap) if is_connected(g) else None
    return ConnectivityReport(
        vertex_connectivity=vertex_connectivity(g),
        edge_connectivity=edge_connectivity(g),
        cyclic_edge_connectivity=NO_CYCLIC_CUT if cut is None else cut.size,
        witness_cut=cut,
    )
