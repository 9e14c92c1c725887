"""
The three contraction activities applied to an accepted (or collapsed) block:

    ccb   contract control block: absorb every control descendant of v
    esc   exclusive source contraction: pull single-use sources into v
    sddc  sequential data dependence contraction: merge attached chains

All three mutate the graph they are given and return a StepResult.
"""

from dataclasses import dataclass, field
from typing import List

from src.errors import GraphError
from src.seg_graph.chains import Chain, chains_into, chain_from
from src.seg_graph.sdg import Sdg, VertexKind, control_region, is_source_vertex
from .trace import Contraction


@dataclass
class StepResult:
    target: int
    blocks: List[int] = field(default_factory=list)
    absorbed: List[int] = field(default_factory=list)
    contractions: List[Contraction] = field(default_factory=list)
    # long chains left for the user
    deferred: List[Chain] = field(default_factory=list)

    @property
    def changed(self):
        return bool(self.contractions)


def contract_logged(g: Sdg, u, v, label, result: StepResult):
    """Contract edge (u, v) into label and append the Contraction record."""
    if g.control.has_edge(u, v) or g.control.has_edge(v, u):
        edge_kind = "control"
    else:
        edge_kind = "data"
    record = Contraction(u, v, edge_kind, label, control_region(g, u), control_region(g, v))
    g.contract(u, v, label)
    result.contractions.append(record)
    result.absorbed.append(v if label == u else u)
    return label


def ccb(g: Sdg, v, skip=()):
    """
    Contract the control block rooted at v, innermost blocks first.

    Args:
        skip: vertices left out of the block (sealed segments of a rejected block).
    """
    if v not in g:
        raise GraphError(f"no vertex {v}")
    skip = set(skip)
    result = StepResult(target=v)

    def contract_block(root):
        children = [c for c in g.control_children(root) if c not in skip]
        for child in children:
            if any(c not in skip for c in g.control_children(child)):
                contract_block(child)
        for child in children:
            contract_logged(g, root, child, root, result)
        if children:
            result.blocks.append(root)

    contract_block(v)
    return result


def _reaches_target(g: Sdg, w, target, region):
    """True when w is target, or leads to it along single-successor vertices of region."""
    seen = set()
    while w != target:
        if w in seen or control_region(g, w) != region or g.data.out_degree(w) != 1:
            return False
        seen.add(w)
        w = next(iter(g.data.successors(w)))
    return True


def _can_absorb(g: Sdg, u, target, region, sealed):
    return (
        u != target
        and u not in sealed
        and is_source_vertex(g, u)
        and g.data.out_degree(u) == 1
        and g.vertices[u].kind != VertexKind.SECONDARY
        and g.control.out_degree(u) == 0
        and control_region(g, u) == region
    )


def esc(g: Sdg, target, sealed=()):
    """
    Contract exclusive sources of target until none is left.

    Each source is merged into its data successor, which keeps its label.
    """
    if target not in g:
        raise GraphError(f"no vertex {target}")
    sealed = set(sealed)
    result = StepResult(target=target)
    region = control_region(g, target)
    changed = True
    while changed:
        changed = False
        for u in g.labels():
            if not _can_absorb(g, u, target, region, sealed):
                continue
            w = next(iter(g.data.successors(u)))
            if w != target and (w in sealed or not _reaches_target(g, w, target, region)):
                continue
            contract_logged(g, u, w, w, result)
            changed = True
            break
    return result


def is_sink(g: Sdg, v):
    return (
        g.vertices[v].kind == VertexKind.PLAIN
        and g.data.in_degree(v) > 0
        and g.data.out_degree(v) == 0
    )


def sddc(g: Sdg, target, sealed=()):
    """
    Merge chains attached to target.

    Incoming unit chains always merge; an incoming long chain merges only
    when it is the only one. Outgoing unit chains merge when their tail is a
    sink; an outgoing long chain merges only when it is the only one. Other
    long chains are returned as deferred.
    """
    if target not in g:
        raise GraphError(f"no vertex {target}")
    sealed = set(sealed)
    result = StepResult(target=target)

    incoming = chains_into(g, target, excluded=sealed)
    long_in = [c for c in incoming if not c.is_unit]
    selected = [c for c in incoming if c.is_unit]
    if len(long_in) == 1:
        selected += long_in
    else:
        result.deferred += long_in
    for chain in selected:
        for vertex in reversed(chain.path[:-1]):
            contract_logged(g, vertex, target, target, result)

    outgoing = chain_from(g, target, excluded=sealed)
    long_out = [c for c in outgoing if not c.is_unit]
    selected = [c for c in outgoing if c.is_unit and is_sink(g, c.tail)]
    if len(long_out) == 1:
        selected += long_out
    else:
        result.deferred += long_out
    for chain in selected:
        for vertex in chain.path[1:]:
            contract_logged(g, target, vertex, target, result)
    return result
