"""
Successive edge contraction over the SDG.

Primary control blocks are visited bottom-up. A block whose LoCS is below
the threshold is accepted: its seg id is resolved by climbing to parents
that belong with it (gsi), then the block is collapsed (ccb), its exclusive
sources pulled in (esc) and its attached chains merged (sddc). The result
is sealed and reported as an extract-method opportunity (Emo).
"""

import traceback
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from src.logger import Logger
from src.seg_graph.independence import is_segment
from src.seg_graph.sdg import Sdg, VertexKind, block_members, build_sdg, control_ancestors, primary_control_vertices
from src.utils import format_index_set, format_ratio
from .config import RATIO_DECIMALS, SegmentationConfig
from .contraction import ccb, esc, sddc
from .metrics import MergerDecision, analyze_block, locs, merger_case, parent_affinity
from .trace import Contraction, ContractionTrace


@dataclass(frozen=True)
class Variant:
    kind: str   # inner, parent or chain
    members: FrozenSet[int]
    note: str = ""

    def __str__(self):
        text = f"{self.kind}:{format_index_set(self.members)}"
        return f"{text} ({self.note})" if self.note else text


@dataclass
class Emo:
    root: int
    members: FrozenSet[int]
    params: Tuple[str, ...]
    returns: Tuple[str, ...]
    score: Fraction
    trace: Tuple[Contraction, ...] = ()
    variants: List[Variant] = field(default_factory=list)
    method: Optional[str] = None

    @property
    def ir_span(self):
        return min(self.members), max(self.members)

    def __str__(self):
        start, end = self.ir_span
        return (f"{format_index_set(self.members)} span {start}..{end} "
                f"params ({', '.join(self.params)}) returns ({', '.join(self.returns)}) "
                f"LoCS {format_ratio(self.score, RATIO_DECIMALS)}")


@dataclass
class SegmentGraph:
    graph: Sdg
    sealed: FrozenSet[int] = frozenset()

    def segments(self):
        """key: seg id, value: IR indices of that segment."""
        return {label: self.graph.vertices[label].members for label in self.graph.labels()}

    def partition(self):
        return sorted((sorted(m) for m in self.segments().values()), key=lambda m: m[0])


def infer_signature(g0: Sdg, members):
    """
    Parameters are variables on data edges entering members; returns are
    variables on data edges leaving them.
    """
    members = frozenset(members)
    params, returns = set(), set()
    for u, v, attrs in g0.data.edges(data=True):
        if u not in members and v in members:
            params.update(attrs["vars"])
        elif u in members and v not in members:
            returns.update(attrs["vars"])
    return tuple(sorted(params)), tuple(sorted(returns))


def rank(emos):
    """Ascending score, then larger blocks, then earlier start."""
    return sorted(emos, key=lambda e: (e.score, -len(e.members), e.ir_span[0]))


class Segmenter:
    """One segmentation run over one method."""

    def __init__(self, config: Optional[SegmentationConfig] = None, method=None, trace: Optional[ContractionTrace] = None):
        self.config = config or SegmentationConfig()
        self.method = method
        self.trace = trace
        self.logger = Logger()

    @property
    def log_prefix(self):
        return f"[{self.method}]" if self.method else "[segment]"

    def log_info(self, message):
        self.logger.info(f"{self.log_prefix} {message}")

    def log_debug(self, message):
        self.logger.debug(f"{self.log_prefix} {message}")

    def log_warning(self, message):
        self.logger.warning(f"{self.log_prefix} {message}")

    def log_error(self, message, with_traceback=True):
        if with_traceback:
            tb = traceback.format_exc()
            message = f"{message}\n{tb}"
        self.logger.error(f"{self.log_prefix} {message}")

    def _note(self, message):
        self.log_debug(message)
        if self.trace is not None:
            self.trace.note(message)

    def _record(self, activity, g, result):
        if self.trace is not None:
            self.trace.record(activity, g, result)
        return result

    # --- pipeline ---

    def segment(self, program):
        g0 = build_sdg(program)
        graph, emos, sealed = self._run(g0)
        return SegmentGraph(graph, frozenset(sealed)), emos

    def cec(self, g0: Sdg):
        graph, emos, _ = self._run(g0)
        return graph, emos

    def _run(self, g0: Sdg):
        g = g0.copy()
        if self.trace is not None:
            self.trace.start(g)
        worklist = primary_control_vertices(g)
        sealed: Set[int] = set()
        # key: seg id of an accepted block, value: its Emo
        emos: Dict[int, Emo] = {}

        while worklist:
            v = worklist.pop()
            if v not in g:
                self._note(f"block {v} already absorbed")
                continue
            analysis = analyze_block(g, v, sealed)
            score = locs(analysis, self.config.no_relay_extract)
            if score is not None and score < self.config.locs_limit:
                self._note(f"block {v} accepted, LoCS {format_ratio(score, RATIO_DECIMALS)}")
                self._accept(g, g0, v, score, worklist, sealed, emos)
            else:
                reason = "not computed" if score is None else format_ratio(score, RATIO_DECIMALS)
                self._reject(g, v, reason, worklist, sealed)

        return g, rank(emos.values()), sealed

    def gsi(self, g: Sdg, v, worklist, sealed=()):
        """
        Climb from v to primary control parents that belong with it.

        Returns:
            (seg id, parent variants) where parent variants record rejected merges.
        """
        current = v
        variants = []
        while True:
            p = g.control_parent(current)
            if p is None or g.kind_of(p) != VertexKind.PRIMARY:
                break
            trial = g.copy()
            ccb(trial, current)
            esc(trial, current, sealed)
            sddc(trial, current, sealed)
            case = merger_case(trial, p, current)
            pa = parent_affinity(trial, p, current)
            pa_text = format_ratio(pa, RATIO_DECIMALS)
            if case.decision == MergerDecision.MERGE or (pa is not None and pa < self.config.pa_limit):
                self._note(f"block {current} climbs to parent {p} ({case.value}, PA {pa_text})")
                if p in worklist:
                    worklist.remove(p)
                current = p
                continue
            self._note(f"parent {p} kept apart from {current} ({case.value}, PA {pa_text})")
            parent_members = frozenset().union(*(trial.members_of(x) for x in block_members(trial, p)))
            variants.append(Variant("parent", parent_members, f"PA {pa_text}"))
            break
        return current, variants

    def _accept(self, g, g0, v, score, worklist, sealed, emos):
        root, variants = self.gsi(g, v, worklist, sealed)
        contractions = []

        collapsed = self._record("ccb", g, ccb(g, root))
        absorbed_sealed = [x for x in collapsed.absorbed if x in sealed]
        pulled = self._record("esc", g, esc(g, root, sealed))
        chained = self._record("sddc", g, sddc(g, root, sealed))
        for result in (collapsed, pulled, chained):
            contractions.extend(result.contractions)
        for chain in chained.deferred:
            chain_members = frozenset().union(*(g.members_of(x) for x in chain.path if x != root and x in g))
            variants.append(Variant("chain", chain_members, f"chain {chain}"))

        members = g.members_of(root)
        for x in absorbed_sealed:
            sealed.discard(x)
        if not is_segment(g0, members):
            self._note(f"block {root} ({format_index_set(members)}) is not a segment, not reported")
            return

        # earlier opportunities inside this one, sealed or not, become inner variants
        inner_keys = [key for key, inner in emos.items() if inner.members <= members]
        for key in reversed(inner_keys):
            inner = emos.pop(key)
            variants.insert(0, Variant("inner", inner.members, f"LoCS {format_ratio(inner.score, RATIO_DECIMALS)}"))
        params, returns = infer_signature(g0, members)
        emo = Emo(root, members, params, returns, score, tuple(contractions), variants, self.method)
        emos[root] = emo
        sealed.add(root)
        if self.trace is not None:
            self.trace.seal(root)
        self.log_info(f"opportunity at {root}: {emo}")

    def _reject(self, g, v, reason, worklist, sealed):
        pending = control_ancestors(g, v) & set(worklist)
        if pending:
            self._note(f"block {v} rejected (LoCS {reason}), left for parent {max(pending)}")
            return
        self._note(f"block {v} rejected (LoCS {reason}), collapsed")
        self._record("ccb", g, ccb(g, v, skip=sealed))
        self._record("esc", g, esc(g, v, sealed))


def cec(g0: Sdg, config: Optional[SegmentationConfig] = None, trace: Optional[ContractionTrace] = None):
    """Contract g0 (left unchanged); returns (final graph, ranked Emos)."""
    return Segmenter(config, trace=trace).cec(g0)


def gsi(g: Sdg, v, worklist, config: Optional[SegmentationConfig] = None, sealed=()):
    return Segmenter(config).gsi(g, v, worklist, sealed)


def segment(program, config: Optional[SegmentationConfig] = None, method=None, trace: Optional[ContractionTrace] = None):
    """build_sdg then cec; returns (SegmentGraph, ranked Emos)."""
    return Segmenter(config, method, trace).segment(program)
