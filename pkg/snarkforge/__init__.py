from loguru import logger

from .Coloring import (
    EdgeColoring,
    chromatic_index,
    find_three_edge_coloring,
    is_snark,
    verify_coloring,
)
from .config import Settings
from .Connectivity import (
    NO_CYCLIC_CUT,
    ConnectivityClass,
    ConnectivityReport,
    NoCyclicCut,
    NotTwoConnected,
    connectivity_class,
    connectivity_report,
    cyclic_edge_connectivity,
    edge_connectivity,
    find_cyclic_cut,
    vertex_connectivity,
)
from .fetch import FetchError, download, fetch_dataset
from .Generation import (
    CountRow,
    CountTable,
    GenSpec,
    InvalidGenSpec,
    OrderTooLarge,
    count_snarks,
    generate,
)
from .Graph import (
    Component,
    CubicGraph,
    EdgeCut,
    GraphFormat,
    GraphFormatError,
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
from .Oddness import (
    AlgorithmDisagreement,
    InvalidMatching,
    Method,
    Mode,
    NoPerfectMatching,
    NotBridgeless,
    NoTwoFactor,
    OddnessError,
    OddnessResult,
    PerfectMatching,
    TwoFactor,
    complement_two_factor,
    enumerate_perfect_matchings,
    oddness,
    oddness_by_matchings,
    oddness_by_two_factors,
    verify_two_factor,
)
from .pipeline import (
    DatasetValidationError,
    InconsistentRecord,
    InvariantRecord,
    build_table,
    compare_to_published,
    compute_invariants,
    invariant_records,
    read_graphs,
    records_frame,
    summarize,
    write_csv,
)
from .Symmetry import CanonicalForm, are_isomorphic, canonical_form

logger.disable("snarkforge")
