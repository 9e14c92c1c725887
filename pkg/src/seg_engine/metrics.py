"""
Block census, Lack of Computational Strength (LoCS) and Parent Affinity (PA).

For a block b_v rooted at a primary control vertex v:

    relays             members with a data edge leaving b_v
    sinks              non-control members consuming data and producing none
    exclusive sources  source vertices outside b_v, in v's control region,
                       whose data successors all lie in b_v
    producers          members with an outgoing data edge, plus exclusive sources
    relay share        producers with a data path to a given relay

    LoCS = #relays / (sum of relay share sizes + #producers in no relay share)
    PA   = 1 - independent parent data nodes / parent data nodes
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx
import pandas as pd

from src.errors import GraphError
from src.seg_graph.chains import Chain, chains_into, chain_from
from src.seg_graph.sdg import Sdg, VertexKind, block_members, control_region, is_source_vertex, primary_control_vertices
from src.utils import format_index_set, format_ratio
from .config import RATIO_DECIMALS
from .contraction import ccb, esc


@dataclass(frozen=True)
class BlockAnalysis:
    block_root: int
    members: FrozenSet[int]
    relays: FrozenSet[int]
    sinks: FrozenSet[int]
    exclusive_sources: FrozenSet[int]
    producers: FrozenSet[int]
    # key: relay, value: producers with a data path to it
    relay_share: Dict[int, FrozenSet[int]]
    non_relay_share: FrozenSet[int]
    incoming_chains: Tuple[Chain, ...] = ()
    outgoing_chains: Tuple[Chain, ...] = ()

    @property
    def total_relay_share(self):
        return sum(len(share) for share in self.relay_share.values())


class MergerDecision(str, Enum):
    MERGE = "merge"
    USE_PA = "use-pa"


class MergerCase(str, Enum):
    DISTINCT_RELAY_ALL_CONNECTED = "distinct-relay-all-connected"
    DISTINCT_RELAY_PARTIAL = "distinct-relay-partial"
    NO_RELAY_ALL_CONNECTED_OR_EMPTY = "no-relay-all-connected-or-empty"
    NO_RELAY_NONE_OR_ALL = "no-relay-none-or-all"

    @property
    def decision(self):
        if self in (MergerCase.DISTINCT_RELAY_ALL_CONNECTED, MergerCase.NO_RELAY_ALL_CONNECTED_OR_EMPTY):
            return MergerDecision.MERGE
        return MergerDecision.USE_PA


def _require_primary(g: Sdg, v):
    if v not in g:
        raise GraphError(f"no vertex {v}")
    if g.vertices[v].kind != VertexKind.PRIMARY:
        raise GraphError(f"vertex {v} is not a primary control vertex")


def _original_path(g: Sdg, chain: Chain, target, incoming):
    """Chain path with the contracted target replaced by the member the attaching edge reaches."""
    path = list(chain.path)
    if incoming:
        pairs = g.edge_pairs(path[-2], path[-1])
        path[-1] = min(b for _, b in pairs)
    else:
        pairs = g.edge_pairs(path[0], path[1])
        path[0] = min(a for a, _ in pairs)
    return Chain(path)


def attached_chains(g: Sdg, v, sealed=()):
    """
    Chains attached to block v once it is collapsed, reported with
    original member endpoints. g is left unchanged.
    """
    trial = g.copy()
    ccb(trial, v, skip=sealed)
    esc(trial, v, sealed)
    incoming = tuple(_original_path(trial, c, v, True) for c in chains_into(trial, v, excluded=sealed))
    outgoing = tuple(_original_path(trial, c, v, False) for c in chain_from(trial, v, excluded=sealed))
    return incoming, outgoing


def analyze_block(g: Sdg, v, sealed=()):
    _require_primary(g, v)
    members = block_members(g, v)
    region = control_region(g, v)

    relays = frozenset(m for m in members if any(s not in members for s in g.data.successors(m)))
    sinks = frozenset(
        m for m in members
        if g.vertices[m].kind == VertexKind.PLAIN and g.data.in_degree(m) > 0 and g.data.out_degree(m) == 0
    )
    exclusive_sources = frozenset(
        u for u in g.vertices
        if u not in members
        and is_source_vertex(g, u)
        and control_region(g, u) == region
        and all(s in members for s in g.data.successors(u))
    )
    producers = frozenset(m for m in members if g.data.out_degree(m) > 0) | exclusive_sources

    scope = g.data.subgraph(members | exclusive_sources)
    relay_share = {r: frozenset(nx.ancestors(scope, r)) & producers for r in sorted(relays)}
    shared = frozenset().union(*relay_share.values()) if relay_share else frozenset()
    incoming, outgoing = attached_chains(g, v, sealed)

    return BlockAnalysis(
        block_root=v,
        members=members,
        relays=relays,
        sinks=sinks,
        exclusive_sources=exclusive_sources,
        producers=producers,
        relay_share=relay_share,
        non_relay_share=producers - shared,
        incoming_chains=incoming,
        outgoing_chains=outgoing,
    )


def locs(a: BlockAnalysis, no_relay_extract=False) -> Optional[Fraction]:
    """
    Lack of Computational Strength, or None when it is not computed
    (no relays without no_relay_extract, or an empty denominator).
    """
    if a.relays:
        numerator = len(a.relays)
    elif no_relay_extract:
        numerator = 1
    else:
        return None
    denominator = a.total_relay_share + len(a.non_relay_share)
    if denominator == 0:
        return None
    return Fraction(numerator, denominator)


def parent_data_nodes(g: Sdg, p, v):
    return frozenset(x for x in block_members(g, p) if x != v and g.data.out_degree(x) > 0)


def independent_nodes(g: Sdg, p, v):
    return frozenset(
        x for x in parent_data_nodes(g, p, v)
        if not g.data.has_edge(x, v) and not g.data.has_edge(v, x)
    )


def parent_affinity(g: Sdg, p, v) -> Optional[Fraction]:
    """PA of parent block p for the contracted child vertex v; None without parent data nodes."""
    _require_primary(g, p)
    if v not in block_members(g, p):
        raise GraphError(f"vertex {v} is not inside block {p}")
    data_nodes = parent_data_nodes(g, p, v)
    if not data_nodes:
        return None
    return 1 - Fraction(len(independent_nodes(g, p, v)), len(data_nodes))


def merger_case(g: Sdg, p, v) -> MergerCase:
    _require_primary(g, p)
    block = block_members(g, p)
    if v not in block:
        raise GraphError(f"vertex {v} is not inside block {p}")
    distinct_relay = any(
        s not in block
        for x in block if x != v
        for s in g.data.successors(x)
    )
    data_nodes = parent_data_nodes(g, p, v)
    all_connected = not independent_nodes(g, p, v)
    if distinct_relay:
        if all_connected:
            return MergerCase.DISTINCT_RELAY_ALL_CONNECTED
        return MergerCase.DISTINCT_RELAY_PARTIAL
    if not data_nodes or all_connected:
        return MergerCase.NO_RELAY_ALL_CONNECTED_OR_EMPTY
    return MergerCase.NO_RELAY_NONE_OR_ALL


def _format_set(values):
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def format_block_report(a: BlockAnalysis, no_relay_extract=False):
    """Census of one block: attribute, vertex set, count."""
    rows: List[Tuple[str, str, str]] = [
        ("Block Vertices", _format_set(a.members), str(len(a.members))),
        ("Relay", _format_set(a.relays), str(len(a.relays))),
        ("Sink", _format_set(a.sinks), str(len(a.sinks))),
        ("Exclusive Sources", _format_set(a.exclusive_sources), str(len(a.exclusive_sources))),
        ("Producer Nodes", _format_set(a.producers), str(len(a.producers))),
    ]
    for relay, share in a.relay_share.items():
        rows.append((f"RelayShare({relay})", _format_set(share), str(len(share))))
    rows.append(("NonRelayShare", _format_set(a.non_relay_share), str(len(a.non_relay_share))))
    for chain in a.incoming_chains:
        rows.append(("Incoming Chain", " ".join(f"<{x},{y}>" for x, y in chain.edges()), str(chain.length)))
    for chain in a.outgoing_chains:
        rows.append(("Outgoing Chain", " ".join(f"<{x},{y}>" for x, y in chain.edges()), str(chain.length)))
    rows.append(("LoCS", format_ratio(locs(a, no_relay_extract), RATIO_DECIMALS), ""))

    width = max(len(r[0]) for r in rows)
    set_width = max(len(r[1]) for r in rows)
    lines = [f"Analysis of control block {a.block_root}"]
    lines.append(f"{'Attribute':<{width}}  {'Vertex Set':<{set_width}}  Count")
    for name, values, count in rows:
        lines.append(f"{name:<{width}}  {values:<{set_width}}  {count}".rstrip())
    return "\n".join(lines) + "\n"


def block_metrics_frame(g: Sdg, sealed=(), no_relay_extract=False):
    """One row per primary control block of g."""
    rows = []
    for v in primary_control_vertices(g):
        a = analyze_block(g, v, sealed)
        value = locs(a, no_relay_extract)
        rows.append({
            'block': v,
            'members': format_index_set(a.members),
            'relays': format_index_set(a.relays),
            'sinks': format_index_set(a.sinks),
            'exclusive_sources': format_index_set(a.exclusive_sources),
            'producers': format_index_set(a.producers),
            'total_relay_share': a.total_relay_share,
            'non_relay_share': len(a.non_relay_share),
            'incoming_chains': len(a.incoming_chains),
            'outgoing_chains': len(a.outgoing_chains),
            'locs': None if value is None else round(float(value), RATIO_DECIMALS),
        })
    columns = ['block', 'members', 'relays', 'sinks', 'exclusive_sources', 'producers',
               'total_relay_share', 'non_relay_share', 'incoming_chains', 'outgoing_chains', 'locs']
    return pd.DataFrame(rows, columns=columns)
