"""
Structure Dependence Graph.

Every vertex owns a non-empty set of IR indices and is keyed by its seg id
(the IR index that names it). Control and data edges live in two
networkx.DiGraph objects over the same vertex set.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Optional

import networkx as nx

from src.errors import GraphError, InvariantViolation, IrValidationError
from src.seg_ir.statement import IrKind, IrProgram
from src.seg_ir.validate import validate


class VertexKind(str, Enum):
    PRIMARY = "primary"
    SECONDARY = "secondary"
    PLAIN = "plain"

    @classmethod
    def of(cls, ir_kind):
        ir_kind = IrKind(ir_kind)
        if ir_kind.is_primary:
            return cls.PRIMARY
        if ir_kind.is_secondary:
            return cls.SECONDARY
        return cls.PLAIN


@dataclass(frozen=True)
class Vertex:
    members: FrozenSet[int]
    kind: VertexKind

    @property
    def span(self):
        return min(self.members), max(self.members)


class Sdg:
    """Mutable graph owned by one caller; use copy() before experimenting."""

    def __init__(self, program: Optional[IrProgram] = None):
        self.program = program
        # key: seg id, value: Vertex
        self.vertices: Dict[int, Vertex] = {}
        self.control = nx.DiGraph()
        self.data = nx.DiGraph()

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, label):
        return label in self.vertices

    def __repr__(self):
        return (f"Sdg({len(self.vertices)} vertices, {self.control.number_of_edges()} control edges, "
                f"{self.data.number_of_edges()} data edges)")

    # --- construction ---

    def add_vertex(self, label, members, kind):
        if label in self.vertices:
            raise GraphError(f"vertex {label} already exists")
        self.vertices[label] = Vertex(frozenset(members), VertexKind(kind))
        self.control.add_node(label)
        self.data.add_node(label)

    def add_control_edge(self, u, v):
        self._require(u, v)
        if u == v:
            raise GraphError(f"self control edge at {u}")
        self.control.add_edge(u, v)

    def add_data_edge(self, u, v, vars=(), pairs=None):
        self._require(u, v)
        if u == v:
            raise GraphError(f"self data edge at {u}")
        pairs = frozenset(pairs) if pairs is not None else frozenset({(u, v)})
        if self.data.has_edge(u, v):
            attrs = self.data.edges[u, v]
            attrs["vars"] = attrs["vars"] | frozenset(vars)
            attrs["pairs"] = attrs["pairs"] | pairs
        else:
            self.data.add_edge(u, v, vars=frozenset(vars), pairs=pairs)

    def copy(self):
        other = Sdg(self.program)
        other.vertices = dict(self.vertices)
        other.control = self.control.copy()
        other.data = self.data.copy()
        return other

    def _require(self, *labels):
        for label in labels:
            if label not in self.vertices:
                raise GraphError(f"no vertex {label}")

    # --- queries ---

    def labels(self):
        return sorted(self.vertices)

    def members_of(self, label):
        self._require(label)
        return self.vertices[label].members

    def kind_of(self, label):
        self._require(label)
        return self.vertices[label].kind

    def vertex_of(self, ir_index):
        """Seg id of the vertex holding an IR index."""
        for label, vertex in self.vertices.items():
            if ir_index in vertex.members:
                return label
        raise GraphError(f"IR index {ir_index} belongs to no vertex")

    def control_parent(self, label) -> Optional[int]:
        self._require(label)
        parents = sorted(self.control.predecessors(label))
        if len(parents) > 1:
            raise InvariantViolation(f"vertex {label} has control parents {parents}")
        return parents[0] if parents else None

    def control_children(self, label):
        self._require(label)
        return sorted(self.control.successors(label))

    def data_preds(self, label):
        self._require(label)
        return sorted(self.data.predecessors(label))

    def data_succs(self, label):
        self._require(label)
        return sorted(self.data.successors(label))

    def edge_vars(self, u, v):
        if not self.data.has_edge(u, v):
            raise GraphError(f"no data edge ({u}, {v})")
        return self.data.edges[u, v]["vars"]

    def edge_pairs(self, u, v):
        if not self.data.has_edge(u, v):
            raise GraphError(f"no data edge ({u}, {v})")
        return self.data.edges[u, v]["pairs"]

    def has_edge(self, u, v):
        return self.control.has_edge(u, v) or self.data.has_edge(u, v)

    def union_graph(self):
        """One DiGraph over both edge kinds; 'control' marks edges that are control-only."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.control.edges, control=True)
        for u, v in self.data.edges:
            graph.add_edge(u, v, control=False)
        return graph

    def all_members(self):
        return frozenset().union(*(v.members for v in self.vertices.values()))

    # --- contraction ---

    def default_label(self, u, v):
        if self.control.has_edge(u, v):
            return u
        if is_source_vertex(self, u):
            return v
        # imported late: chains builds on this module
        from .chains import is_chain_edge
        if is_chain_edge(self, u, v):
            return u
        return v

    def contract(self, u, v, label=None):
        """
        Merge u and v in place along an existing edge.

        Returns:
            The seg id of the merged vertex.
        """
        self._require(u, v)
        if not self.has_edge(u, v):
            raise GraphError(f"no edge ({u}, {v}) to contract")
        label = self.default_label(u, v) if label is None else label
        if label not in (u, v):
            raise GraphError(f"label {label} is neither endpoint of ({u}, {v})")
        return self.merge(label, v if label == u else u)

    def merge(self, keep, drop):
        """
        Merge vertex drop into vertex keep, adjacent or not.

        Incident edges are retargeted, duplicates collapse, self-edges vanish.
        Data edge variables and IR pairs are united.
        """
        self._require(keep, drop)
        if keep == drop:
            raise GraphError(f"cannot merge vertex {keep} with itself")

        # key: retargeted data edge, value: (vars, pairs)
        remapped = {}
        for node in (keep, drop):
            for a, b, attrs in list(self.data.in_edges(node, data=True)) + list(self.data.out_edges(node, data=True)):
                a = keep if a == drop else a
                b = keep if b == drop else b
                if a == b:
                    continue
                vars, pairs = remapped.setdefault((a, b), (set(), set()))
                vars.update(attrs["vars"])
                pairs.update(attrs["pairs"])

        nx.contracted_nodes(self.control, keep, drop, self_loops=False, copy=False)
        nx.contracted_nodes(self.data, keep, drop, self_loops=False, copy=False)
        self.control.nodes[keep].clear()
        self.data.nodes[keep].clear()
        for a, b in list(self.control.in_edges(keep)) + list(self.control.out_edges(keep)):
            self.control.edges[a, b].clear()
        for (a, b), (vars, pairs) in remapped.items():
            attrs = self.data.edges[a, b]
            attrs.clear()
            attrs.update(vars=frozenset(vars), pairs=frozenset(pairs))

        keep_vertex = self.vertices[keep]
        drop_vertex = self.vertices.pop(drop)
        self.vertices[keep] = Vertex(keep_vertex.members | drop_vertex.members, keep_vertex.kind)
        if self.control.in_degree(keep) > 1:
            raise InvariantViolation(f"merging {drop} into {keep} gave two control parents")
        return keep


def build_sdg(program: IrProgram):
    """
    Map an IR program to its SDG: one vertex per statement, a data edge from
    the last prior definition of every used variable, a control edge from
    every direct control parent.
    """
    diagnostics = validate(program)
    if diagnostics:
        raise IrValidationError(diagnostics)

    g = Sdg(program)
    for stmt in program:
        g.add_vertex(stmt.index, {stmt.index}, VertexKind.of(stmt.kind))
    for stmt in program:
        for var in stmt.used:
            source = program.last_defined(var, stmt.index)
            if source is not None:
                g.add_data_edge(source, stmt.index, vars={var})
        parent = program.parent_of(stmt.index)
        if parent is not None:
            g.add_control_edge(parent, stmt.index)
    return g


def contract_edge(g: Sdg, u, v, label=None):
    """Contracted copy of g; g itself is left unchanged."""
    other = g.copy()
    other.contract(u, v, label)
    return other


def is_source_vertex(g: Sdg, v):
    g._require(v)
    return g.data.in_degree(v) == 0 and g.data.out_degree(v) > 0


def control_region(g: Sdg, v):
    parent = g.control_parent(v)
    return -1 if parent is None else parent


def control_depth(g: Sdg, u, v):
    """
    Fewest control edges on a directed u -> v path over both edge kinds.

    Returns:
        0 for u == v, None when v is unreachable from u.
    """
    g._require(u, v)
    if u == v:
        return 0
    graph = g.union_graph()
    for a, b, attrs in graph.edges(data=True):
        attrs["weight"] = 1 if attrs["control"] and not g.data.has_edge(a, b) else 0
    try:
        return nx.shortest_path_length(graph, u, v, weight="weight")
    except nx.NetworkXNoPath:
        return None


def primary_control_vertices(g: Sdg):
    return [label for label in g.labels() if g.vertices[label].kind == VertexKind.PRIMARY]


def block_members(g: Sdg, v):
    """v plus all its control descendants."""
    g._require(v)
    return frozenset({v}) | nx.descendants(g.control, v)


def control_ancestors(g: Sdg, v):
    g._require(v)
    return nx.ancestors(g.control, v)
