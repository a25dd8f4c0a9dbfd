from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import partial
from itertools import permutations
from multiprocessing import Pool
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import pandas as pd
from loguru import logger

from .Coloring import is_snark
from .Connectivity import ConnectivityClass, connectivity_class, vertex_connectivity
from .Graph import CubicGraph, from_graph6, to_graph6
from .Oddness import Mode, oddness
from .Symmetry import canonical_form

DEFAULT_MAX_ORDER = 22
DEFAULT_SPLIT_DEPTH = 6

Snapshot = Tuple[Tuple[Tuple[int, ...], ...], int]


class OrderTooLarge(Exception):
    """Raised when a requested order is above the generation ceiling."""

    def __init__(self, message="Requested order is above the generation ceiling."):
        self.message = message
        super().__init__(self.message)


class InvalidGenSpec(ValueError):
    """Raised for an order or girth bound no cubic graph search can use."""

    def __init__(self, message="Invalid generation request."):
        self.message = message
        super().__init__(self.message)


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    Attributes:
        n (int): Order of the graphs, even and at least 4.
        min_girth (int): Girth lower bound, one of 3, 4, 5.
        two_connected (bool): Keep only 2-connected graphs.
        snarks_only (bool): Keep only snarks (implies two_connected).
    """

    n: int
    min_girth: int = 3
    two_connected: bool = False
    snarks_only: bool = False

    def __post_init__(self):
        if self.n < 4 or self.n % 2:
            raise InvalidGenSpec(f"Cubic graphs have even order >= 4, got {self.n}.")
        if self.min_girth not in (3, 4, 5):
            raise InvalidGenSpec(f"min_girth must be 3, 4 or 5, got {self.min_girth}.")
        if self.min_girth > self.n:
            raise InvalidGenSpec("min_girth can't exceed the order.")


@dataclass
class CountRow:
    """Snark counts for one order.

    Attributes:
        order (int): Number of vertices.
        all (int): 2-connected snarks of that order and girth bound.
        oddness4_conn2 (int): Oddness-4 snarks with cyclic connectivity 2.
        oddness4_conn3 (int): Oddness-4 snarks with cyclic connectivity 3.
        oddness4_total (int): All oddness-4 snarks.
        oddness6_plus (int): Snarks with oddness 6 or more.
    """

    order: int
    all: int = 0
    oddness4_conn2: int = 0
    oddness4_conn3: int = 0
    oddness4_total: int = 0
    oddness6_plus: int = 0

    def as_tuple(self) -> Tuple[int, int, int, int, int]:
        return (
            self.order,
            self.all,
            self.oddness4_conn2,
            self.oddness4_conn3,
            self.oddness4_total,
        )


@dataclass
class CountTable:
    """Per-order snark tallies laid out like the published count tables."""

    min_girth: int
    rows: List[CountRow] = field(default_factory=list)

    COLUMNS = ["Order", "All", "Connectivity 2", "Connectivity 3", "Total"]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([r.as_tuple() for r in self.rows], columns=self.COLUMNS)


class _Builder:
    """Orderly construction of connected cubic graphs in breadth-first labeling.

    The lowest incomplete vertex v is joined, in increasing order, to existing
    vertices above it with spare degree or to the next unused vertex. Every
    connected cubic graph has exactly one labeling whose adjacency code (the
    sorted neighbour rows read in vertex order) is least, and that labeling is
    a breadth-first one this construction reaches. A state is dropped as soon
    as some breadth-first relabeling of its finished vertices already gives a
    smaller code prefix, so each isomorphism class is completed once.
    """

    def __init__(self, n: int, min_girth: int, snapshot: Optional[Snapshot] = None):
        self.n = n
        self.min_girth = min_girth
        if snapshot is None:
            self.adj: List[List[int]] = [[] for _ in range(n)]
            self.next_new = 1
        else:
            rows, self.next_new = snapshot
            self.adj = [list(r) for r in rows]

    def snapshot(self) -> Snapshot:
        return tuple(tuple(a) for a in self.adj), self.next_new

    def run(self, split_depth: Optional[int] = None) -> Iterator[Tuple[bool, object]]:
        """Walk the construction tree.

        Yields (True, adjacency) for every accepted complete graph, and with a
        split depth, (False, snapshot) for each state at that many edges instead
        of descending into it.
        """
        v = next((u for u in range(self.n) if len(self.adj[u]) < 3), self.n)
        if v == self.n:
            yield True, tuple(tuple(a) for a in self.adj)
            return
        depth = sum(len(a) for a in self.adj) // 2
        yield from self._extend(v, depth, split_depth)

    def _extend(self, v: int, depth: int, split_depth: Optional[int]):
        adj = self.adj
        if len(adj[v]) == 3:
            if not self._is_least():
                return
            v += 1
            if v == self.n:
                yield True, tuple(tuple(a) for a in adj)
            elif v < self.next_new:
                yield from self._extend(v, depth, split_depth)
            return

        if split_depth is not None and depth >= split_depth:
            yield False, self.snapshot()
            return

        low = max(v, max(adj[v], default=v))
        for w in range(low + 1, self.next_new):
            if len(adj[w]) < 3 and self._girth_ok(v, w):
                adj[v].append(w)
                adj[w].append(v)
                yield from self._extend(v, depth + 1, split_depth)
                adj[w].pop()
                adj[v].pop()

        if self.next_new < self.n:
            w = self.next_new
            self.next_new += 1
            adj[v].append(w)
            adj[w].append(v)
            yield from self._extend(v, depth + 1, split_depth)
            adj[w].pop()
            adj[v].pop()
            self.next_new -= 1

    def _girth_ok(self, v: int, w: int) -> bool:
        """A new edge v-w closes a cycle of length dist(v, w) + 1."""
        limit = self.min_girth - 2
        if limit <= 0:
            return True
        dist = {v: 0}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            if dist[x] == limit:
                continue
            for y in self.adj[x]:
                if y not in dist:
                    if y == w:
                        return False
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return True

    def _is_least(self) -> bool:
        rows = [tuple(sorted(a)) if len(a) == 3 else None for a in self.adj]
        for root in range(self.next_new):
            if rows[root] is None:
                continue
            label = [-1] * self.n
            label[root] = 0
            if self._smaller(0, [root], label, rows):
                return False
        return True

    def _smaller(
        self, i: int, order: List[int], label: List[int], rows: Sequence
    ) -> bool:
        """Whether the relabeling grown so far can be finished to a smaller code."""
        if i == len(order):
            return False
        x = order[i]
        if rows[x] is None or rows[i] is None:
            return False
        fresh = [w for w in self.adj[x] if label[w] < 0]
        base = len(order)
        row = tuple(
            sorted([label[w] for w in self.adj[x] if label[w] >= 0] + list(range(base, base + len(fresh))))
        )
        if row != rows[i]:
            return row < rows[i]
        for perm in permutations(fresh):
            for k, w in enumerate(perm):
                label[w] = base + k
                order.append(w)
            found = self._smaller(i + 1, order, label, rows)
            for w in perm:
                label[w] = -1
                order.pop()
            if found:
                return True
        return False


def ensure_within_ceiling(n: int, max_order: int) -> None:
    if n > max_order:
        raise OrderTooLarge(
            f"Order {n} is above the generation ceiling {max_order}. "
            "Raise SNARKFORGE_MAX_ORDER to allow it."
        )


def _accepts(g: CubicGraph, spec: GenSpec) -> bool:
    if spec.snarks_only:
        return is_snark(g, spec.min_girth)
    if spec.two_connected:
        return vertex_connectivity(g) >= 2
    return True


def _run_subtree(spec: GenSpec, snapshot: Snapshot) -> List[Tuple[str, str]]:
    """Finish one subtree and return (canonical key, graph6) of the graphs it accepts."""
    found = []
    for _, rows in _Builder(spec.n, spec.min_girth, snapshot).run():
        g = CubicGraph(spec.n, rows)
        if _accepts(g, spec):
            found.append((canonical_form(g).key, to_graph6(g)))
    return found


def generate(
    spec: GenSpec,
    workers: int = 1,
    max_order: int = DEFAULT_MAX_ORDER,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
) -> Iterator[CubicGraph]:
    """Yield one graph per isomorphism class of connected cubic graphs matching spec.

    The construction tree is cut at split_depth edges; the subtrees are finished
    by a worker pool and merged back in tree order, so the stream is the same
    for every worker count.

    Args:
        spec (GenSpec): Order, girth bound and filters.
        workers (int, optional): Worker processes. Defaults to 1.
        max_order (int, optional): Ceiling on spec.n. Defaults to 22.
        split_depth (int, optional): Edges placed before splitting into subtrees. Defaults to 6.

    Raises:
        OrderTooLarge: spec.n is above max_order.

    Yields:
        Iterator[CubicGraph]: The graphs, labeled canonically for the construction.
    """
    ensure_within_ceiling(spec.n, max_order)
    logger.info(
        "Generating order {n}, girth >= {girth}, two-connected={tc}, snarks-only={so}",
        n=spec.n,
        girth=spec.min_girth,
        tc=spec.two_connected,
        so=spec.snarks_only,
    )

    subtrees = []
    for complete, item in _Builder(spec.n, spec.min_girth).run(split_depth):
        subtrees.append(item if not complete else (item, spec.n))
    logger.info("Split construction into {k} subtrees.", k=len(subtrees))

    run = partial(_run_subtree, spec)
    if workers > 1:
        with Pool(processes=workers) as pool:
            batches = pool.imap(run, subtrees, chunksize=1)
            yield from _merge(batches)
    else:
        yield from _merge(map(run, subtrees))


def _merge(batches) -> Iterator[CubicGraph]:
    seen = set()
    emitted = 0
    for batch in batches:
        for key, text in batch:
            if key in seen:
                logger.warning("Dropped a repeated isomorphism class: {g}", g=text)
                continue
            seen.add(key)
            emitted += 1
            if emitted % 1000 == 0:
                logger.info("{k} graphs emitted.", k=emitted)
            yield from_graph6(text)
    logger.info("Emitted {k} graphs.", k=emitted)


def count_snarks(
    n: int,
    min_girth: int,
    workers: int = 1,
    mode: Union[Mode, str] = Mode.CROSS_CHECKED,
    max_order: int = DEFAULT_MAX_ORDER,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
) -> CountRow:
    """Tally the snarks of one order by oddness and connectivity class.

    Args:
        n (int): Order.
        min_girth (int): Girth lower bound.
        workers (int, optional): Worker processes for generation. Defaults to 1.
        mode (Union[Mode, str], optional): Oddness mode. Defaults to Mode.CROSS_CHECKED,
            which stops on any disagreement between the two algorithms.
        max_order (int, optional): Generation ceiling. Defaults to 22.
        split_depth (int, optional): Subtree split depth. Defaults to 6.

    Returns:
        CountRow: The row of the count table for this order.
    """
    spec = GenSpec(n, min_girth, two_connected=True, snarks_only=True)
    row = CountRow(order=n)
    for g in generate(spec, workers, max_order, split_depth):
        row.all += 1
        value = oddness(g, mode).value
        if value == 4:
            row.oddness4_total += 1
            cls = connectivity_class(g)
            if cls is ConnectivityClass.TWO:
                row.oddness4_conn2 += 1
            elif cls is ConnectivityClass.THREE:
                row.oddness4_conn3 += 1
        elif value >= 6:
            row.oddness6_plus += 1
    if row.oddness6_plus:
        logger.warning(
            "{k} snarks of order {n} have oddness 6 or more.", k=row.oddness6_plus, n=n
        )
    logger.info("Order {n}: {row}", n=n, row=row.as_tuple())
    return row
