from __future__ import annotations

from dataclasses import astuple, dataclass
from functools import partial
from multiprocessing import Pool
from pathlib import Path
from typing import IO, Dict, Iterable, Iterator, List, Optional, Tuple, Union

import pandas as pd
from loguru import logger

from .Coloring import find_three_edge_coloring, verify_coloring
from .Connectivity import (
    NO_CYCLIC_CUT,
    NoCyclicCut,
    find_cyclic_cut,
    vertex_connectivity,
)
from .Generation import (
    DEFAULT_MAX_ORDER,
    DEFAULT_SPLIT_DEPTH,
    CountTable,
    InvalidGenSpec,
    count_snarks,
    ensure_within_ceiling,
)
from .Graph import (
    CubicGraph,
    GraphFormatError,
    bridges,
    components_after_deletion,
    from_graph6,
    girth,
    to_graph6,
)
from .Oddness import Mode, oddness, oddness_by_matchings, verify_two_factor
from .Symmetry import canonical_form

HEADER = [
    "key",
    "order",
    "girth",
    "chi_prime",
    "oddness",
    "kappa",
    "cyclic_lambda",
    "aut_order",
]
MISSING = "none"

# All / Connectivity 2 / Connectivity 3 / Total for 2-connected snarks.
PUBLISHED_COUNTS: Dict[int, Dict[int, Tuple[int, int, int, int]]] = {
    4: {
        10: (1, 0, 0, 0),
        12: (0, 0, 0, 0),
        14: (1, 0, 0, 0),
        16: (4, 0, 0, 0),
        18: (26, 0, 0, 0),
        20: (167, 0, 0, 0),
        22: (1448, 0, 0, 0),
        24: (15168, 0, 0, 0),
        26: (189861, 0, 0, 0),
        28: (2716555, 2, 1, 3),
        30: (43504872, 9, 4, 13),
        32: (767442160, 57, 32, 89),
        34: (14752529374, 454, 313, 767),
    },
    5: {
        10: (1, 0, 0, 0),
        12: (0, 0, 0, 0),
        14: (0, 0, 0, 0),
        16: (0, 0, 0, 0),
        18: (3, 0, 0, 0),
        20: (14, 0, 0, 0),
        22: (107, 0, 0, 0),
        24: (1109, 0, 0, 0),
        26: (15255, 0, 0, 0),
        28: (236966, 2, 1, 3),
        30: (4043956, 9, 4, 13),
        32: (74989646, 33, 21, 54),
        34: (1500084086, 139, 138, 277),
    },
}


class DatasetValidationError(Exception):
    """Raised when a line of a graph6 dataset isn't a valid cubic graph."""

    def __init__(self, line: int, message="Invalid graph."):
        self.line = line
        self.message = f"line {line}: {message}"
        super().__init__(self.message)


class InconsistentRecord(Exception):
    """Raised when re-verification of an invariant record fails."""

    def __init__(self, message="Invariant record failed re-verification."):
        self.message = message
        super().__init__(self.message)


@dataclass(frozen=True)
class InvariantRecord:
    """One CSV row of graph invariants.

    Attributes:
        key (str): Canonical graph6 key.
        order (int): Number of vertices.
        girth (int): Length of a shortest cycle.
        chi_prime (int): Chromatic index, 3 or 4.
        oddness (Optional[int]): Oddness, None when the graph has a bridge.
        kappa (int): Vertex connectivity.
        cyclic_lambda (Union[int, NoCyclicCut]): Cyclic edge-connectivity up to the cap.
        aut_order (int): Automorphism group order.
    """

    key: str
    order: int
    girth: int
    chi_prime: int
    oddness: Optional[int]
    kappa: int
    cyclic_lambda: Union[int, NoCyclicCut]
    aut_order: int


def read_graphs(source: Union[str, Path, IO[str]]) -> List[CubicGraph]:
    """Read one graph6 graph per line, skipping blank lines.

    Args:
        source (Union[str, Path, IO[str]]): A path, or an open text stream.

    Raises:
        DatasetValidationError: A line doesn't decode to a cubic graph. Carries the 1-based line number.

    Returns:
        List[CubicGraph]: The graphs in file order.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="ascii", errors="replace") as con:
            return read_graphs(con)

    graphs = []
    for lineno, line in enumerate(source, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            graphs.append(from_graph6(line))
        except (GraphFormatError, UnicodeError) as e:
            raise DatasetValidationError(lineno, getattr(e, "message", str(e))) from e
    return graphs


def compute_invariants(
    g: CubicGraph, mode: Union[Mode, str] = Mode.CROSS_CHECKED, cyclic_cap: Optional[int] = None
) -> InvariantRecord:
    """Compute the invariant record of a graph.

    Colourable graphs get oddness 0 without running the oddness search.

    Args:
        g (CubicGraph): Graph to describe.
        mode (Union[Mode, str], optional): Oddness mode. Defaults to Mode.CROSS_CHECKED.
        cyclic_cap (Optional[int], optional): Largest cyclic cut to look for. Defaults to the girth.

    Returns:
        InvariantRecord: The record.
    """
    form = canonical_form(g)
    chi_prime = 3 if find_three_edge_coloring(g) is not None else 4
    if chi_prime == 3:
        odd: Optional[int] = 0
    elif bridges(g):
        odd = None
    else:
        odd = oddness(g, mode).value

    kappa = vertex_connectivity(g)
    if kappa == 0:
        # Two components, each with a cycle, are separated by no edges at all.
        cyclic = 0
    else:
        cut = find_cyclic_cut(g, cyclic_cap)
        cyclic = NO_CYCLIC_CUT if cut is None else cut.size

    return InvariantRecord(
        key=form.key,
        order=g.n,
        girth=girth(g),
        chi_prime=chi_prime,
        oddness=odd,
        kappa=kappa,
        cyclic_lambda=cyclic,
        aut_order=form.automorphism_order,
    )


def verify_record(g: CubicGraph, record: InvariantRecord) -> None:
    """Re-check a record by independent routes.

    Raises:
        InconsistentRecord: Any check fails.
    """
    coloring = find_three_edge_coloring(g, symmetry_breaking=False)
    if coloring is not None and not verify_coloring(g, coloring):
        raise InconsistentRecord(f"{record.key}: colouring fails verification.")
    if (coloring is not None) != (record.chi_prime == 3):
        raise InconsistentRecord(f"{record.key}: chromatic index changed on recheck.")

    if record.oddness is not None and not bridges(g):
        other = oddness_by_matchings(g)
        if other.value != record.oddness or not verify_two_factor(g, other.witness):
            raise InconsistentRecord(
                f"{record.key}: oddness {record.oddness} but matchings give {other.value}."
            )
        if (record.oddness == 0) != (record.chi_prime == 3):
            raise InconsistentRecord(f"{record.key}: oddness 0 iff colourable fails.")

    if isinstance(record.cyclic_lambda, int) and record.cyclic_lambda > 0:
        if record.cyclic_lambda > 1 and find_cyclic_cut(g, record.cyclic_lambda - 1) is not None:
            raise InconsistentRecord(f"{record.key}: a smaller cyclic cut exists.")
        cut = find_cyclic_cut(g, record.cyclic_lambda)
        parts = components_after_deletion(g, cut) if cut is not None else []
        if cut is None or sum(p.has_cycle for p in parts) < 2:
            raise InconsistentRecord(f"{record.key}: cyclic cut witness does not separate cycles.")


def invariant_records(
    graphs: Iterable[CubicGraph],
    mode: Union[Mode, str] = Mode.CROSS_CHECKED,
    workers: int = 1,
    cyclic_cap: Optional[int] = None,
    verify_every: int = 100,
) -> Iterator[InvariantRecord]:
    """Invariant records in input order, optionally computed by a worker pool.

    Every verify_every-th graph (the first included) is re-verified.

    Args:
        graphs (Iterable[CubicGraph]): Input graphs.
        mode (Union[Mode, str], optional): Oddness mode. Defaults to Mode.CROSS_CHECKED.
        workers (int, optional): Worker processes. Defaults to 1.
        cyclic_cap (Optional[int], optional): Largest cyclic cut to look for. Defaults to the girth.
        verify_every (int, optional): Re-verification stride, 0 to disable. Defaults to 100.

    Yields:
        Iterator[InvariantRecord]: One record per graph.
    """
    mode = Mode(mode).value
    jobs = [
        (to_graph6(g), bool(verify_every) and i % verify_every == 0)
        for i, g in enumerate(graphs)
    ]
    run = partial(_record_job, mode, cyclic_cap)

    if workers > 1:
        with Pool(processes=workers) as pool:
            yield from _progress(pool.imap(run, jobs, chunksize=1), len(jobs))
    else:
        yield from _progress(map(run, jobs), len(jobs))


def _progress(records, total: int) -> Iterator[InvariantRecord]:
    for i, record in enumerate(records, start=1):
        if i % 100 == 0:
            logger.info("{i} of {k} graphs processed.", i=i, k=total)
        yield record


def _record_job(
    mode: str, cyclic_cap: Optional[int], job: Tuple[str, bool]
) -> InvariantRecord:
    text, verify = job
    g = from_graph6(text)
    record = compute_invariants(g, mode, cyclic_cap)
    if verify:
        verify_record(g, record)
    return record


def _cell(value) -> str:
    if value is None or value is NO_CYCLIC_CUT:
        return MISSING
    return str(value)


def records_frame(records: Iterable[InvariantRecord]) -> pd.DataFrame:
    rows = [[_cell(v) for v in astuple(r)] for r in records]
    return pd.DataFrame(rows, columns=HEADER)


def write_csv(frame: pd.DataFrame, out: Union[str, Path, IO[str]]) -> None:
    frame.to_csv(out, index=False, lineterminator="\n")


def build_table(
    min_girth: int,
    max_order: int,
    workers: int = 1,
    mode: Union[Mode, str] = Mode.FAST,
    ceiling: int = DEFAULT_MAX_ORDER,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
) -> CountTable:
    """Count table for orders 10, 12, ..., max_order.

    Args:
        min_girth (int): 4 or 5.
        max_order (int): Last order, even and at least 10.
        workers (int, optional): Worker processes. Defaults to 1.
        mode (Union[Mode, str], optional): Oddness mode. Defaults to Mode.FAST.
        ceiling (int, optional): Generation ceiling. Defaults to 22.
        split_depth (int, optional): Subtree split depth. Defaults to 6.

    Returns:
        CountTable: One row per order.
    """
    if max_order < 10 or max_order % 2:
        raise InvalidGenSpec(f"max_order must be even and at least 10, got {max_order}.")
    ensure_within_ceiling(max_order, ceiling)
    table = CountTable(min_girth)
    for n in range(10, max_order + 1, 2):
        table.rows.append(count_snarks(n, min_girth, workers, mode, ceiling, split_depth))
    return table


def compare_to_published(table: CountTable) -> List[str]:
    """Differences between computed rows and the published counts, as messages."""
    published = PUBLISHED_COUNTS.get(table.min_girth, {})
    problems = []
    for row in table.rows:
        expected = published.get(row.order)
        if expected is None:
            continue
        got = row.as_tuple()[1:]
        if got != expected:
            problems.append(f"order {row.order}: computed {got}, published {expected}")
    return problems


def format_table(table: CountTable, fmt: str = "csv") -> str:
    frame = table.to_frame()
    if fmt == "csv":
        return frame.to_csv(index=False, lineterminator="\n")
    return frame.to_string(index=False) + "\n"


def summarize(frame: pd.DataFrame) -> pd.DataFrame:
    """Per-oddness summary of an invariants table.

    Args:
        frame (pd.DataFrame): Invariants as written by the invariants command.

    Returns:
        pd.DataFrame: For each oddness value, the number of graphs, the
            cyclic-connectivity split, and the most symmetric graph.
    """
    frame = frame.astype({"key": str, "oddness": str, "cyclic_lambda": str})
    frame = frame.assign(aut_order=pd.to_numeric(frame["aut_order"]))
    rows = []
    for value, group in frame.groupby("oddness", sort=True):
        top = group.sort_values(["aut_order", "key"], ascending=[False, True]).iloc[0]
        split = group["cyclic_lambda"].value_counts().sort_index()
        rows.append(
            {
                "oddness": value,
                "graphs": len(group),
                "cyclic_lambda": " ".join(f"{k}:{v}" for k, v in split.items()),
                "max_aut_order": int(top["aut_order"]),
                "most_symmetric": top["key"],
            }
        )
    return pd.DataFrame(rows)
