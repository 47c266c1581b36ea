"""Pressing dynamics on loopy graphs over GF(2).

Pressing a looped vertex complements the edges among its neighbors and
isolates it; a sequence of presses that empties the graph is called
successful.  This package models the dynamic on a bit-packed GF(2)
kernel, decides in O(n^3) whether a graph has exactly one successful
sequence, generates and counts all graphs that do, and cross-checks
everything against brute-force search at small sizes.
"""

from .gf2 import (
    BitMatrix,
    BitRow,
    DimensionError,
    MatrixFormatError,
    gf2_dot,
    iter_support,
    leading_principal_minors,
    principal_submatrix,
    transpose_mul,
)
from .graphs import (
    Component,
    GraphFormatError,
    InvalidPressError,
    PseudoGraph,
    UnknownVertexError,
    detect_format,
    from_adjacency,
    parse_auto,
    parse_graph,
)
from .cholesky import (
    CholeskyRoot,
    NotOrderPressableError,
    PressingOrder,
    UnpressableError,
    find_pressing_order,
    instructional_root,
)
from .recognition import (
    REASON_MULTI_COMPONENT,
    REASON_TIE,
    REASON_UNPRESSABLE,
    OracleBoundError,
    PropertyReport,
    RecognitionReport,
    check_properties,
    count_sequences_bruteforce,
    pressing_length,
    recognize,
)
from .generate import (
    CensusResult,
    NotUniquelyPressableError,
    all_pseudographs,
    canonical_form,
    census,
    cup_count,
    cup_from_choices,
    extend_left,
    extend_right,
    generate_cup,
    random_cup,
    shift_labels,
    total_count,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BitRow",
    "BitMatrix",
    "DimensionError",
    "MatrixFormatError",
    "gf2_dot",
    "iter_support",
    "transpose_mul",
    "leading_principal_minors",
    "principal_submatrix",
    "PseudoGraph",
    "Component",
    "GraphFormatError",
    "UnknownVertexError",
    "InvalidPressError",
    "from_adjacency",
    "parse_graph",
    "parse_auto",
    "detect_format",
    "CholeskyRoot",
    "PressingOrder",
    "NotOrderPressableError",
    "UnpressableError",
    "instructional_root",
    "find_pressing_order",
    "PropertyReport",
    "RecognitionReport",
    "OracleBoundError",
    "REASON_MULTI_COMPONENT",
    "REASON_UNPRESSABLE",
    "REASON_TIE",
    "check_properties",
    "recognize",
    "count_sequences_bruteforce",
    "pressing_length",
    "NotUniquelyPressableError",
    "extend_right",
    "extend_left",
    "shift_labels",
    "generate_cup",
    "cup_from_choices",
    "random_cup",
    "cup_count",
    "total_count",
    "all_pseudographs",
    "canonical_form",
    "CensusResult",
    "census",
]
