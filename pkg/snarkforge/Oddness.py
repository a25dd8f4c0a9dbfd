from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterator, List, Optional, Tuple

from .Graph import CubicGraph, bridges


class OddnessError(Exception):
    """Base class for oddness computation failures."""

    def __init__(self, message="Oddness computation failed."):
        self.message = message
        super().__init__(self.message)


class NoPerfectMatching(OddnessError):
    """Raised when the graph has no perfect matching (it can't be bridgeless)."""

    def __init__(self, message="Graph has no perfect matching."):
        super().__init__(message)


class InvalidMatching(OddnessError):
    """Raised when an edge set is not a perfect matching of the graph."""

    def __init__(self, message="Edge set is not a perfect matching."):
        super().__init__(message)


class NoTwoFactor(OddnessError):
    """Raised when the graph has no 2-factor (it can't be bridgeless)."""

    def __init__(self, message="Graph has no 2-factor."):
        super().__init__(message)


class NotBridgeless(OddnessError):
    """Raised when oddness is requested for a graph with a bridge."""

    def __init__(self, message="Oddness is only defined for bridgeless cubic graphs."):
        super().__init__(message)


class AlgorithmDisagreement(OddnessError):
    """Raised when the two oddness algorithms return different values."""

    def __init__(self, message="Oddness algorithms disagree."):
        super().__init__(message)


class Method(str, Enum):
    MATCHING_COMPLEMENT = "matching-complement"
    DIRECT_TWO_FACTOR = "direct-2-factor"


class Mode(str, Enum):
    FAST = "fast"
    CROSS_CHECKED = "cross-checked"


@dataclass(frozen=True)
class PerfectMatching:
    """Set of n/2 edge indices covering each vertex once."""

    edges: FrozenSet[int]


@dataclass(frozen=True)
class TwoFactor:
    """Spanning set of vertex-disjoint cycles.

    Attributes:
        cycles (Tuple[Tuple[int, ...], ...]): Each cycle as a cyclic vertex sequence.
        odd_count (int): Number of cycles of odd length.
    """

    cycles: Tuple[Tuple[int, ...], ...]
    odd_count: int

    @classmethod
    def from_cycles(cls, cycles) -> TwoFactor:
        cycles = tuple(tuple(c) for c in cycles)
        return cls(cycles, sum(len(c) % 2 for c in cycles))


@dataclass(frozen=True)
class OddnessResult:
    """Oddness of a graph with a 2-factor attaining it.

    Attributes:
        value (int): The oddness, always even.
        witness (TwoFactor): A 2-factor with exactly `value` odd cycles.
        method (Method): Which algorithm produced the result.
    """

    value: int
    witness: TwoFactor
    method: Method


def verify_two_factor(g: CubicGraph, factor: TwoFactor) -> bool:
    """Check that the cycles partition the vertices, use edges of g, and that odd_count is right."""
    covered = [v for cycle in factor.cycles for v in cycle]
    if sorted(covered) != list(range(g.n)):
        return False
    for cycle in factor.cycles:
        if len(cycle) < 3:
            return False
        for i, v in enumerate(cycle):
            if not g.adjacent(v, cycle[i - 1]):
                return False
    return factor.odd_count == sum(len(c) % 2 for c in factor.cycles)


def enumerate_perfect_matchings(g: CubicGraph) -> Iterator[PerfectMatching]:
    """Yield every perfect matching of g exactly once.

    Backtracks on the lowest-index uncovered vertex, trying its incident edges
    in stored order.

    Args:
        g (CubicGraph): A bridgeless cubic graph.

    Raises:
        NoPerfectMatching: No matching was found at all.

    Yields:
        Iterator[PerfectMatching]: The perfect matchings.
    """
    covered = [False] * g.n
    chosen: List[int] = []
    found = 0

    def extend(start: int) -> Iterator[PerfectMatching]:
        v = start
        while v < g.n and covered[v]:
            v += 1
        if v == g.n:
            yield PerfectMatching(frozenset(chosen))
            return
        covered[v] = True
        for e, w in zip(g.incidence[v], g.adjacency[v]):
            if covered[w]:
                continue
            covered[w] = True
            chosen.append(e)
            yield from extend(v + 1)
            chosen.pop()
            covered[w] = False
        covered[v] = False

    for matching in extend(0):
        found += 1
        yield matching
    if not found:
        raise NoPerfectMatching()


def complement_two_factor(g: CubicGraph, m: PerfectMatching) -> TwoFactor:
    """Split the edges outside a perfect matching into cycles.

    Args:
        g (CubicGraph): The host graph.
        m (PerfectMatching): A perfect matching of g.

    Raises:
        InvalidMatching: m doesn't cover every vertex exactly once.

    Returns:
        TwoFactor: The complementary 2-factor; cycles start at their lowest vertex.
    """
    hits = [0] * g.n
    for e in m.edges:
        if not 0 <= e < g.m:
            raise InvalidMatching(f"Edge index {e} is out of range.")
        u, v = g.edges[e]
        hits[u] += 1
        hits[v] += 1
    if any(h != 1 for h in hits):
        raise InvalidMatching()

    seen = [False] * g.n
    cycles = []
    for start in range(g.n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        prev, v = -1, start
        while True:
            nxt = next(
                w
                for e, w in zip(g.incidence[v], g.adjacency[v])
                if e not in m.edges and w != prev
            )
            if nxt == start:
                break
            seen[nxt] = True
            cycle.append(nxt)
            prev, v = v, nxt
        cycles.append(cycle)
    return TwoFactor.from_cycles(cycles)


def oddness_by_matchings(g: CubicGraph) -> OddnessResult:
    """Oddness as the fewest odd cycles over the complements of all perfect matchings.

    Args:
        g (CubicGraph): A bridgeless cubic graph.

    Returns:
        OddnessResult: Smallest odd-cycle count with its 2-factor.
    """
    best: Optional[TwoFactor] = None
    for matching in enumerate_perfect_matchings(g):
        factor = complement_two_factor(g, matching)
        if best is None or factor.odd_count < best.odd_count:
            best = factor
            if best.odd_count == 0:
                break
    return OddnessResult(best.odd_count, best, Method.MATCHING_COMPLEMENT)


def _odd_parts(g: CubicGraph, covered: List[bool]) -> int:
    """Components of odd order among the uncovered vertices."""
    seen = list(covered)
    odd = 0
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        size, stack = 0, [start]
        while stack:
            v = stack.pop()
            size += 1
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        odd += size % 2
    return odd


def oddness_by_two_factors(
    g: CubicGraph, parity_bound: bool = False, pruning: bool = True
) -> OddnessResult:
    """Oddness by building 2-factors cycle by cycle with branch and bound.

    Each new cycle starts at the lowest uncovered vertex and grows through
    uncovered neighbours in stored adjacency order. The bound is the number of
    odd cycles closed so far; optionally each odd-order component of the
    uncovered remainder adds one more, since it can't be covered by even cycles.

    Args:
        g (CubicGraph): A bridgeless cubic graph.
        parity_bound (bool, optional): Use the component parity bound. Defaults to False.
        pruning (bool, optional): Prune on the bound and stop at 0. Turning it off
            searches every 2-factor. Defaults to True.

    Raises:
        NoTwoFactor: The graph has no 2-factor.

    Returns:
        OddnessResult: Fewest odd cycles over all 2-factors, with a witness.
    """
    covered = [False] * g.n
    cycles: List[List[int]] = []
    best_cycles: Optional[List[List[int]]] = None
    best = g.n + 1

    def stranded() -> bool:
        # Every uncovered vertex needs two uncovered neighbours.
        return any(
            not covered[v] and sum(not covered[w] for w in g.adjacency[v]) < 2
            for v in range(g.n)
        )

    def close_cycle(odd: int) -> bool:
        nonlocal best, best_cycles
        start = next((v for v in range(g.n) if not covered[v]), -1)
        if start < 0:
            if odd < best:
                best, best_cycles = odd, [list(c) for c in cycles]
            return pruning and best == 0
        if pruning:
            bound = odd + (_odd_parts(g, covered) if parity_bound else 0)
            if bound >= best:
                return False
        if stranded():
            return False
        covered[start] = True
        path = [start]
        done = grow(path, odd)
        covered[start] = False
        return done

    def grow(path: List[int], odd: int) -> bool:
        v = path[-1]
        start = path[0]
        for w in g.adjacency[v]:
            if w == start and len(path) >= 3 and path[1] < path[-1]:
                cycles.append(list(path))
                done = close_cycle(odd + len(path) % 2)
                cycles.pop()
                if done:
                    return True
            elif not covered[w]:
                covered[w] = True
                path.append(w)
                done = grow(path, odd)
                path.pop()
                covered[w] = False
                if done:
                    return True
        return False

    close_cycle(0)
    if best_cycles is None:
        raise NoTwoFactor()
    return OddnessResult(best, TwoFactor.from_cycles(best_cycles), Method.DIRECT_TWO_FACTOR)


def oddness(g: CubicGraph, mode: Mode = Mode.FAST) -> OddnessResult:
    """Oddness of a bridgeless cubic graph.

    Args:
        g (CubicGraph): A bridgeless cubic graph.
        mode (Mode, optional): FAST runs the 2-factor search only; CROSS_CHECKED
            also runs the matching algorithm and compares. Defaults to Mode.FAST.

    Raises:
        NotBridgeless: g has a bridge.
        AlgorithmDisagreement: The two algorithms returned different values.

    Returns:
        OddnessResult: Result of the 2-factor search.
    """
    mode = Mode(mode)
    if bridges(g):
        raise NotBridgeless()
    direct = oddness_by_two_factors(g)
    if mode is Mode.CROSS_CHECKED:
        via_matchings = oddness_by_matchings(g)
        if via_matchings.value != direct.value:
            raise AlgorithmDisagreement(
                f"Matching complement gives {via_matchings.value}, "
                f"direct 2-factor search gives {direct.value}."
            )
    return direct
