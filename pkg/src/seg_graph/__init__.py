"""seg_graph - Structure Dependence Graph, chains, segment tests and DOT export."""

from .sdg import (
    Sdg,
    Vertex,
    VertexKind,
    build_sdg,
    contract_edge,
    is_source_vertex,
    control_region,
    control_depth,
    primary_control_vertices,
    block_members,
    control_ancestors,
)
from .chains import Chain, is_chain_edge, find_chains, chains_into, chain_from
from .independence import is_control_independent, is_data_independent, is_weakly_connected, is_segment, labels_covering
from .dot import build_digraph, to_dot, write_dot, render_svg, dump_sdg

__all__ = [
    "Sdg",
    "Vertex",
    "VertexKind",
    "build_sdg",
    "contract_edge",
    "is_source_vertex",
    "control_region",
    "control_depth",
    "primary_control_vertices",
    "block_members",
    "control_ancestors",
    "Chain",
    "is_chain_edge",
    "find_chains",
    "chains_into",
    "chain_from",
    "is_control_independent",
    "is_data_independent",
    "is_weakly_connected",
    "is_segment",
    "labels_covering",
    "build_digraph",
    "to_dot",
    "write_dot",
    "render_svg",
    "dump_sdg",
]
