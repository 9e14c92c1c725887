"""seg_engine - Block metrics and the successive edge contraction pipeline."""

from .config import SegmentationConfig
from .metrics import (
    BlockAnalysis,
    MergerCase,
    MergerDecision,
    analyze_block,
    locs,
    parent_affinity,
    merger_case,
    format_block_report,
    block_metrics_frame,
)
from .contraction import StepResult, ccb, esc, sddc
from .trace import Contraction, TraceStep, ContractionTrace
from .engine import Variant, Emo, SegmentGraph, Segmenter, cec, gsi, segment, infer_signature, rank
from .suggestions import Suggestion, suggestions_frame, write_suggestions, read_suggestions

__all__ = [
    "SegmentationConfig",
    "BlockAnalysis",
    "MergerCase",
    "MergerDecision",
    "analyze_block",
    "locs",
    "parent_affinity",
    "merger_case",
    "format_block_report",
    "block_metrics_frame",
    "StepResult",
    "ccb",
    "esc",
    "sddc",
    "Contraction",
    "TraceStep",
    "ContractionTrace",
    "Variant",
    "Emo",
    "SegmentGraph",
    "Segmenter",
    "cec",
    "gsi",
    "segment",
    "infer_signature",
    "rank",
    "Suggestion",
    "suggestions_frame",
    "write_suggestions",
    "read_suggestions",
]
