"""Recognition of orthodox path-in-tree intersection graphs ORTH[h,2,t].

Graphs are :class:`SimpleGraph` objects with string labels. The main entry
point is :func:`recognize`, which returns a :class:`RecognitionReport`
carrying either a checkable certificate or an obstruction.
"""

from .bounds import SeparatingInterval, complete_line_graph_member, extremal_tree, max_leaves, separating_interval
from .graph import (
    BlockDecomposition,
    GraphParseError,
    Multigraph,
    SimpleGraph,
    TwinPartition,
    blocks,
    format_edge_list,
    graph_to_dot,
    is_isomorphic,
    line_graph,
    line_graph_with_map,
    parse_graph,
    reduce_twins,
    twin_classes,
)
from .layout import (
    LayoutError,
    LayoutTree,
    OrthodoxRepresentation,
    Violation,
    ViolationKind,
    combine_layouts,
    join_representations,
    layout_of_representation,
    normalize_representation,
    orthodox_representation,
    suppress_degree_two,
    validate_layout,
    validate_representation,
)
from .linegraph import RootResult, is_line_graph, root_graph
from .obstructions import (
    SearchBudgetExceeded,
    SubdivisionWitness,
    check_orth323_necessary,
    contains_subdivision,
    is_planar,
    pattern,
)
from .recognize import (
    SeparatorSplit,
    bruteforce_layout,
    build_layout_blocks,
    recognize,
    recognize_orth322,
    recognize_orth_h2t,
    separator_split,
)
from .report import Obstruction, RecognitionReport, Verdict

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "GraphParseError",
    "LayoutError",
    "LayoutTree",
    "Multigraph",
    "Obstruction",
    "OrthodoxRepresentation",
    "RecognitionReport",
    "RootResult",
    "SearchBudgetExceeded",
    "SeparatingInterval",
    "SeparatorSplit",
    "SimpleGraph",
    "SubdivisionWitness",
    "TwinPartition",
    "Verdict",
    "Violation",
    "ViolationKind",
    "blocks",
    "bruteforce_layout",
    "build_layout_blocks",
    "check_orth323_necessary",
    "combine_layouts",
    "complete_line_graph_member",
    "contains_subdivision",
    "extremal_tree",
    "format_edge_list",
    "graph_to_dot",
    "is_isomorphic",
    "is_line_graph",
    "is_planar",
    "join_representations",
    "layout_of_representation",
    "line_graph",
    "line_graph_with_map",
    "max_leaves",
    "normalize_representation",
    "orthodox_representation",
    "parse_graph",
    "pattern",
    "recognize",
    "recognize_orth322",
    "recognize_orth_h2t",
    "reduce_twins",
    "root_graph",
    "separating_interval",
    "separator_split",
    "suppress_degree_two",
    "twin_classes",
    "validate_layout",
    "validate_representation",
]
