"""
Segmentation Refactor Tool

Extract method refactoring opportunities by successive edge contraction
of the structure dependence graph.
"""

__version__ = "2026.10.0"

# Package information
__title__ = "segmentation-refactor-tool"
__description__ = "Extract method refactoring opportunities by successive edge contraction"

# Import main components for easier access
from .seg_ir import parse_ir, read_ir_file
from .seg_front import translate, translate_unit
from .seg_graph import build_sdg
from .seg_engine import SegmentationConfig, segment

__all__ = ["parse_ir", "read_ir_file", "translate", "translate_unit", "build_sdg", "SegmentationConfig", "segment"]
