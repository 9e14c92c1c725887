"""
Chains: data-edge paths whose interior vertices have exactly one data
predecessor and one data successor. Chains never cross a control-region
border and never pass through a vertex owning control children.
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

import networkx as nx

from .sdg import Sdg, VertexKind, control_region


@dataclass(frozen=True)
class Chain:
    path: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "path", tuple(self.path))
        if len(self.path) < 2:
            raise ValueError(f"a chain needs at least one edge, got {self.path}")

    @property
    def head(self):
        return self.path[0]

    @property
    def tail(self):
        return self.path[-1]

    @property
    def length(self):
        return len(self.path) - 1

    @property
    def is_unit(self):
        return self.length == 1

    def edges(self):
        return list(zip(self.path, self.path[1:]))

    def __str__(self):
        return " -> ".join(str(v) for v in self.path)


def is_chain_edge(g: Sdg, u, w):
    return (
        g.data.has_edge(u, w)
        and g.data.out_degree(u) == 1
        and g.data.in_degree(w) == 1
        and control_region(g, u) == control_region(g, w)
        and g.control.out_degree(w) == 0
    )


def find_chains(g: Sdg):
    """Maximal chains in ascending head order; closed cycles are ignored."""
    chain_graph = nx.DiGraph()
    chain_graph.add_edges_from((u, w) for u, w in g.data.edges if is_chain_edge(g, u, w))
    chains = []
    for head in sorted(chain_graph.nodes):
        if chain_graph.in_degree(head) != 0:
            continue
        path = [head]
        while chain_graph.out_degree(path[-1]) == 1:
            path.append(next(iter(chain_graph.successors(path[-1]))))
        chains.append(Chain(path))
    return chains


def _eligible(g: Sdg, v, target, excluded):
    return (
        v != target
        and v not in excluded
        and g.vertices[v].kind != VertexKind.SECONDARY
        and g.control.out_degree(v) == 0
        and control_region(g, v) == control_region(g, target)
    )


def chains_into(g: Sdg, v, excluded: Iterable[int] = ()):
    """
    Chains ending at v, one per eligible data predecessor.

    The attaching edge (u, v) only needs u to have a single data successor;
    the walk then extends backwards while the current head has one data
    predecessor that itself feeds nothing else.
    """
    excluded = set(excluded)
    chains = []
    for u in g.data_preds(v):
        if not _eligible(g, u, v, excluded) or g.data.out_degree(u) != 1:
            continue
        path = [u, v]
        while g.data.in_degree(path[0]) == 1:
            x = next(iter(g.data.predecessors(path[0])))
            if x in path or g.data.out_degree(x) != 1 or not _eligible(g, x, v, excluded):
                break
            path.insert(0, x)
        chains.append(Chain(path))
    return chains


def chain_from(g: Sdg, v, excluded: Iterable[int] = ()):
    """Chains starting at v, one per eligible data successor with a single data predecessor."""
    excluded = set(excluded)
    chains = []
    for w in g.data_succs(v):
        if not _eligible(g, w, v, excluded) or g.data.in_degree(w) != 1:
            continue
        path = [v, w]
        while g.data.out_degree(path[-1]) == 1:
            y = next(iter(g.data.successors(path[-1])))
            if y in path or g.data.in_degree(y) != 1 or not _eligible(g, y, v, excluded):
                break
            path.append(y)
        chains.append(Chain(path))
    return chains
