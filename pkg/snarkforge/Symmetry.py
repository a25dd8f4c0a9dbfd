from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .Graph import CubicGraph, relabel, to_graph6

Cells = List[List[int]]
Code = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class CanonicalForm:
    """Labeling-independent form of a graph.

    Attributes:
        key (str): graph6 string of the canonically relabeled graph.
        automorphism_order (int): Size of the automorphism group.
    """

    key: str
    automorphism_order: int


def _distance_profile(g: CubicGraph, root: int) -> Tuple[int, ...]:
    dist = [-1] * g.n
    dist[root] = 0
    counts = [0] * g.n
    queue = deque([root])
    while queue:
        v = queue.popleft()
        counts[dist[v]] += 1
        for w in g.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def _initial_cells(g: CubicGraph) -> Cells:
    profiles = [_distance_profile(g, v) for v in range(g.n)]
    return [
        [v for v in range(g.n) if profiles[v] == p] for p in sorted(set(profiles))
    ]


def _refine(g: CubicGraph, cells: Cells) -> Cells:
    """Split cells by neighbour counts into every cell until nothing changes."""
    while True:
        cell_masks = [sum(1 << v for v in cell) for cell in cells]
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            sig = {
                v: tuple(bin(g.masks[v] & mask).count("1") for mask in cell_masks)
                for v in cell
            }
            for s in sorted(set(sig.values())):
                refined.append([v for v in cell if sig[v] == s])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _target_cell(cells: Cells) -> int:
    best, size = -1, None
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (size is None or len(cell) < size):
            best, size = i, len(cell)
    return best


def _leaf_code(g: CubicGraph, cells: Cells) -> Tuple[Code, List[int]]:
    label = [0] * g.n
    for position, (v,) in enumerate(cells):
        label[v] = position
    rows: List[Tuple[int, ...]] = [()] * g.n
    for v, nbrs in enumerate(g.adjacency):
        rows[label[v]] = tuple(sorted(label[w] for w in nbrs))
    return tuple(rows), label


def canonical_form(g: CubicGraph) -> CanonicalForm:
    """Canonical graph6 key and automorphism group order.

    The search individualizes vertices of the first smallest non-singleton cell
    and refines, down to discrete partitions. The canonical leaf minimizes
    (partition trace, adjacency code); the number of leaves that tie with it is
    the automorphism group order.

    Args:
        g (CubicGraph): Graph to canonicalize.

    Returns:
        CanonicalForm: The key and automorphism count.
    """
    best_trace: Optional[Tuple[Tuple[int, ...], ...]] = None
    best_code: Optional[Code] = None
    best_label: List[int] = []
    count = 0

    def search(cells: Cells, trace: Tuple[Tuple[int, ...], ...]):
        nonlocal best_trace, best_code, best_label, count
        if best_trace is not None and trace > best_trace[: len(trace)]:
            return
        target = _target_cell(cells)
        if target < 0:
            code, label = _leaf_code(g, cells)
            key = (trace, code)
            if best_trace is None or key < (best_trace, best_code):
                best_trace, best_code, best_label, count = trace, code, label, 1
            elif key == (best_trace, best_code):
                count += 1
            return
        for v in cells[target]:
            rest = [w for w in cells[target] if w != v]
            split = cells[:target] + [[v], rest] + cells[target + 1 :]
            split = _refine(g, split)
            search(split, trace + (tuple(len(c) for c in split),))

    cells = _refine(g, _initial_cells(g))
    search(cells, (tuple(len(c) for c in cells),))
    return CanonicalForm(to_graph6(relabel(g, best_label)), count)


def are_isomorphic(a: CubicGraph, b: CubicGraph) -> bool:
    if a.n != b.n:
        return False
    return canonical_form(a).key == canonical_form(b).key
