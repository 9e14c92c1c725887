"""
Segment tests over vertex sets of an SDG.
"""

import networkx as nx

from src.errors import GraphError
from .sdg import Sdg, VertexKind, control_region


def _as_set(g: Sdg, s):
    s = frozenset(s)
    missing = sorted(v for v in s if v not in g.vertices)
    if missing:
        raise GraphError(f"vertices {missing} are not in the graph")
    return s


def is_control_independent(g: Sdg, s):
    """
    No control edge leaves s, and the control edges entering s all come
    from one outside vertex, at least one of them into a primary control vertex.
    """
    s = _as_set(g, s)
    entering_from = set()
    enters_primary = False
    for u, v in g.control.edges:
        if u in s and v not in s:
            return False
        if u not in s and v in s:
            entering_from.add(u)
            enters_primary = enters_primary or g.vertices[v].kind == VertexKind.PRIMARY
    if not entering_from:
        return True
    return len(entering_from) == 1 and enters_primary


def is_data_independent(g: Sdg, s):
    """Every data edge crossing the border of s joins two different control regions."""
    s = _as_set(g, s)
    for u, v in g.data.edges:
        if (u in s) != (v in s) and control_region(g, u) == control_region(g, v):
            return False
    return True


def is_weakly_connected(g: Sdg, s):
    s = _as_set(g, s)
    if not s:
        return False
    return nx.is_weakly_connected(g.union_graph().subgraph(s))


def is_segment(g: Sdg, s):
    s = _as_set(g, s)
    return is_weakly_connected(g, s) and is_control_independent(g, s) and is_data_independent(g, s)


def labels_covering(g: Sdg, ir_indices):
    """Seg ids of the vertices holding the given IR indices; they must be covered exactly."""
    ir_indices = frozenset(ir_indices)
    labels = {label for label, vertex in g.vertices.items() if vertex.members & ir_indices}
    covered = frozenset().union(*(g.vertices[label].members for label in labels)) if labels else frozenset()
    if covered != ir_indices:
        raise GraphError(f"IR indices {sorted(ir_indices)} split a vertex of the graph")
    return labels
