"""Graph representation, serialization, generators and enumeration."""

from .core import (
    FAMILIES,
    DegreeSummary,
    Graph,
    GraphClass,
    GraphError,
    bfs_distances,
    classify,
    complement,
    degree_summary,
    diameter,
    disjoint_union,
    edgeless,
    from_edge_list,
    generate_family,
    remove_vertex,
)
from .enumeration import (
    canonical_key,
    edge_slots,
    enumerate_labeled,
    enumerate_up_to,
    labeled_count,
)
from .io import (
    GraphFormatError,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    read_graph6,
    write_graph6,
)

__all__ = [
    "FAMILIES",
    "DegreeSummary",
    "Graph",
    "GraphClass",
    "GraphError",
    "GraphFormatError",
    "bfs_distances",
    "canonical_key",
    "classify",
    "complement",
    "degree_summary",
    "diameter",
    "disjoint_union",
    "edge_slots",
    "edgeless",
    "enumerate_labeled",
    "enumerate_up_to",
    "format_edge_list",
    "from_edge_list",
    "generate_family",
    "labeled_count",
    "parse_edge_list",
    "parse_graph6",
    "read_graph6",
    "remove_vertex",
    "write_graph6",
]
