"""seg_eval - Ground truth files and precision/recall scoring of suggestions."""

from .ground_truth import Mark, parse_mark, load_ground_truth, read_ground_truth
from .matching import (
    MatchReport,
    as_span,
    deviation,
    greedy_pairs,
    optimal_pairs,
    match_opportunities,
    tolerance_sweep,
    sweep_frame,
)
from .plot import plot_tolerance_sweep

__all__ = [
    "Mark",
    "parse_mark",
    "load_ground_truth",
    "read_ground_truth",
    "MatchReport",
    "as_span",
    "deviation",
    "greedy_pairs",
    "optimal_pairs",
    "match_opportunities",
    "tolerance_sweep",
    "sweep_frame",
    "plot_tolerance_sweep",
]
