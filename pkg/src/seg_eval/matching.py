"""
Scoring suggested opportunities against marked ground truth.

A suggestion matches a mark of the same method when both boundaries deviate
by at most the tolerance. Matching is one-to-one.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import networkx as nx
import pandas as pd

from src.seg_engine.config import DEFAULT_SWEEP_TOLERANCES, MATCH_STRATEGIES, RATIO_DECIMALS
from src.utils import format_ratio
from .ground_truth import Mark


@dataclass(frozen=True)
class MatchReport:
    tolerance: int
    tp: int
    fp: int
    fn: int
    precision: Optional[Fraction]
    recall: Optional[Fraction]
    f_measure: Optional[Fraction]
    # (suggestion position, mark position) of every matched pair
    pairs: Tuple[Tuple[int, int], ...] = ()

    def to_text(self):
        lines = [
            f"tolerance: {self.tolerance}",
            f"tp: {self.tp}",
            f"fp: {self.fp}",
            f"fn: {self.fn}",
            f"precision: {format_ratio(self.precision, RATIO_DECIMALS)}",
            f"recall: {format_ratio(self.recall, RATIO_DECIMALS)}",
            f"f_measure: {format_ratio(self.f_measure, RATIO_DECIMALS)}",
        ]
        return "\n".join(lines) + "\n"


def as_span(item):
    """(method, start, end) of a Mark, Suggestion, Emo or plain tuple."""
    if isinstance(item, Mark):
        return item.method, item.start, item.end
    if hasattr(item, "ir_start"):
        return getattr(item, "method", None), item.ir_start, item.ir_end
    if hasattr(item, "ir_span"):
        start, end = item.ir_span
        return getattr(item, "method", None), start, end
    if len(item) == 2:
        return (None, *item)
    return tuple(item)


def _methods_agree(a, b):
    return a is None or b is None or a == b


def deviation(suggestion, mark, tolerance):
    """Total boundary deviation, or None when outside the tolerance."""
    s_method, s_start, s_end = suggestion
    m_method, m_start, m_end = mark
    if not _methods_agree(s_method, m_method):
        return None
    d_start, d_end = abs(s_start - m_start), abs(s_end - m_end)
    if d_start > tolerance or d_end > tolerance:
        return None
    return d_start + d_end


def _candidates(suggested, marks, tolerance):
    candidates = []
    for si, s in enumerate(suggested):
        for mi, m in enumerate(marks):
            d = deviation(s, m, tolerance)
            if d is not None:
                candidates.append((d, mi, si))
    return candidates


def greedy_pairs(suggested, marks, tolerance):
    """Smallest total deviation first; ties go to the earlier mark, then the earlier suggestion."""
    used_s, used_m, pairs = set(), set(), []
    for _, mi, si in sorted(_candidates(suggested, marks, tolerance)):
        if si in used_s or mi in used_m:
            continue
        used_s.add(si)
        used_m.add(mi)
        pairs.append((si, mi))
    return sorted(pairs)


def optimal_pairs(suggested, marks, tolerance):
    """Maximum number of pairs, then minimum total deviation."""
    graph = nx.Graph()
    ceiling = 2 * tolerance + 1
    for d, mi, si in _candidates(suggested, marks, tolerance):
        graph.add_edge(("s", si), ("m", mi), weight=ceiling - d)
    matching = nx.max_weight_matching(graph, maxcardinality=True)
    pairs = []
    for a, b in matching:
        s, m = (a, b) if a[0] == "s" else (b, a)
        pairs.append((s[1], m[1]))
    return sorted(pairs)


def _ratio(numerator, denominator):
    return Fraction(numerator, denominator) if denominator > 0 else None


def build_report(tolerance, pairs, suggestion_count, mark_count):
    tp = len(pairs)
    fp = suggestion_count - tp
    fn = mark_count - tp
    precision = _ratio(tp, tp + fp)
    recall = _ratio(tp, tp + fn)
    f_measure = None
    if precision is not None and recall is not None and precision + recall > 0:
        f_measure = 2 * precision * recall / (precision + recall)
    return MatchReport(tolerance, tp, fp, fn, precision, recall, f_measure, tuple(pairs))


def match_opportunities(suggested, marks, tolerance, strategy="greedy") -> MatchReport:
    if tolerance < 0:
        raise ValueError(f"tolerance must be non-negative, got {tolerance}")
    if strategy not in MATCH_STRATEGIES:
        raise ValueError(f"unknown matching strategy {strategy!r}, expected one of {', '.join(MATCH_STRATEGIES)}")
    suggested = [as_span(s) for s in suggested]
    marks = [as_span(m) for m in marks]
    if strategy == "greedy":
        pairs = greedy_pairs(suggested, marks, tolerance)
    else:
        pairs = optimal_pairs(suggested, marks, tolerance)
    return build_report(tolerance, pairs, len(suggested), len(marks))


def tolerance_sweep(suggested, marks, tolerances=DEFAULT_SWEEP_TOLERANCES, strategy="greedy") -> List[MatchReport]:
    return [match_opportunities(suggested, marks, t, strategy) for t in tolerances]


def sweep_frame(reports):
    def ratio(value):
        return None if value is None else round(float(value), RATIO_DECIMALS)

    rows = [{
        'tolerance': r.tolerance,
        'tp': r.tp,
        'fp': r.fp,
        'fn': r.fn,
        'precision': ratio(r.precision),
        'recall': ratio(r.recall),
        'f_measure': ratio(r.f_measure),
    } for r in reports]
    return pd.DataFrame(rows, columns=['tolerance', 'tp', 'fp', 'fn', 'precision', 'recall', 'f_measure'])
