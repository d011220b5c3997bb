"""Dominating-set reconfiguration under token addition and removal.

Construct, verify, and exhaustively audit TAR reconfiguration sequences
between dominating sets: three constructive transformations (general,
minor-sparse, treewidth-guided), a brute-force reconfiguration-graph
oracle, and generators for the extremal instance families.
"""

from .general import UnreachableError, common_vertex_path, general_transform, is_ds_to_is_path
from .graphs import (
    Graph,
    GraphFormatError,
    GraphInvariants,
    LimitError,
    exact_invariants,
    format_graph,
    format_vertex_list,
    greedy_maximal_is,
    is_connected,
    is_dominating,
    is_minimal_dominating,
    parse_graph,
    parse_vertex_list,
    reduce_to_minimal,
)
from .minor_sparse import (
    DensityEntry,
    DensityWitness,
    NotMinorSparseError,
    SwapWitness,
    find_swap,
    minor_sparse_transform,
    pad_to_size,
    suggested_density,
    verify_density_witness,
)
from .oracle import (
    ReconfigGraph,
    ThresholdRecord,
    ThresholdReport,
    build_reconfig_graph,
    diameter,
    distance,
    frozen_sets,
    threshold_scan,
)
from .sequences import (
    Move,
    ReconfigSequence,
    SequenceFormatError,
    VerificationReport,
    apply_move,
    format_sequence,
    parse_sequence,
    reverse_sequence,
    sequence_from_vertices,
    verify_sequence,
)
from .treewidth import (
    DecompositionError,
    NormalizedTD,
    SweepError,
    TreeDecomposition,
    classify_left,
    format_td,
    normalize_td,
    parse_td,
    treewidth_transform,
    validate_td,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphFormatError",
    "GraphInvariants",
    "LimitError",
    "exact_invariants",
    "format_graph",
    "format_vertex_list",
    "greedy_maximal_is",
    "is_connected",
    "is_dominating",
    "is_minimal_dominating",
    "parse_graph",
    "parse_vertex_list",
    "reduce_to_minimal",
    "Move",
    "ReconfigSequence",
    "SequenceFormatError",
    "VerificationReport",
    "apply_move",
    "format_sequence",
    "parse_sequence",
    "reverse_sequence",
    "sequence_from_vertices",
    "verify_sequence",
    "ReconfigGraph",
    "ThresholdRecord",
    "ThresholdReport",
    "build_reconfig_graph",
    "diameter",
    "distance",
    "frozen_sets",
    "threshold_scan",
    "UnreachableError",
    "common_vertex_path",
    "general_transform",
    "is_ds_to_is_path",
    "DensityEntry",
    "DensityWitness",
    "NotMinorSparseError",
    "SwapWitness",
    "find_swap",
    "minor_sparse_transform",
    "pad_to_size",
    "suggested_density",
    "verify_density_witness",
    "DecompositionError",
    "NormalizedTD",
    "SweepError",
    "TreeDecomposition",
    "classify_left",
    "format_td",
    "normalize_td",
    "parse_td",
    "treewidth_transform",
    "validate_td",
    "__version__",
]
