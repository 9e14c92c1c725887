"""
Configuration for segmentation runs and their reports.

Shared defaults for the engine, the evaluation harness and the CLI.
"""

from dataclasses import dataclass
from fractions import Fraction

# --- Gate thresholds ---
# A block is extracted when its LoCS is strictly below this value.
DEFAULT_LOCS_THRESHOLD = 0.41
# A parent block is merged (case ii / iv) when its PA is strictly below this value.
DEFAULT_PA_THRESHOLD = 0.34
# Admit blocks without relays into the LoCS gate, counting the numerator as 1.
DEFAULT_NO_RELAY_EXTRACT = False

# --- Evaluation ---
# Allowed deviation (in IR statements) at either end of a matched opportunity.
DEFAULT_TOLERANCE = 1
# Tolerances evaluated by a sweep.
DEFAULT_SWEEP_TOLERANCES = (0, 1, 2, 3)
# Matching strategies accepted by the evaluation harness.
MATCH_STRATEGIES = ("greedy", "optimal")

# --- Report formatting ---
# Decimal places for LoCS, PA, precision, recall and F-measure in text and CSV output.
RATIO_DECIMALS = 4

# --- File names ---
# Suffix of IR text files.
IR_SUFFIX = ".ir"
# Suffix of source map sidecar files.
MAP_SUFFIX = ".map"
# Suffix of DOT files.
DOT_SUFFIX = ".dot"
# Suffix of SVG renderings.
SVG_SUFFIX = ".svg"
# Suggestions table written by the segment command.
SUGGESTIONS_FILE_NAME = "suggestions.csv"
# Per-block metrics table written by the metrics command.
METRICS_FILE_NAME = "block_metrics.csv"
# Tolerance sweep table and plot written by the eval command.
SWEEP_FILE_NAME = "tolerance_sweep.csv"
SWEEP_PLOT_FILE_NAME = "tolerance_sweep.png"
# Directory (under the output directory) holding contraction snapshots.
TRACE_DIR_NAME = "trace"
# Text log of a contraction trace.
TRACE_LOG_FILE_NAME = "trace.log"
# Snapshot of the SDG before any contraction.
TRACE_INITIAL_STEP = "sdg"

# --- Plot defaults ---
# Default output DPI for saved PNG images.
DPI_DEFAULT = 200
# Matplotlib backend used in headless environments.
MATPLOTLIB_BACKEND = "Agg"
# Figure width in inches.
CANVAS_WIDTH_INCHES = 8.0
# Figure height in inches.
CANVAS_HEIGHT_INCHES = 5.0
# Font size for chart title text.
TITLE_SIZE = 16
# Extra vertical spacing (points) between title and plotting area.
TITLE_PAD = 10
# Font size for axis title text (x/y labels).
LABEL_SIZE = 14
# Font size for tick labels on both axes.
TICK_LABEL_SIZE = 12
# Legend label font size.
LEGEND_FONT_SIZE = 12
# Marker size for point-based series.
MARKER_SIZE = 6
# Default line width for line charts.
LINE_WIDTH = 2.0
# Grid line transparency (0=transparent, 1=opaque).
GRID_ALPHA = 0.18
# Outer figure padding applied by constrained_layout (inches).
LAYOUT_PAD = 0.04

# --- Common colors ---
PRECISION_COLOR = "#1f77b4"
RECALL_COLOR = "#ff7f0e"
F_MEASURE_COLOR = "#2ca02c"


def to_fraction(value):
    """Exact rational for a threshold given as float, str or Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(str(value))


@dataclass(frozen=True)
class SegmentationConfig:
    locs_threshold: float = DEFAULT_LOCS_THRESHOLD
    pa_threshold: float = DEFAULT_PA_THRESHOLD
    no_relay_extract: bool = DEFAULT_NO_RELAY_EXTRACT
    tolerance: int = DEFAULT_TOLERANCE

    def __post_init__(self):
        for name in ("locs_threshold", "pa_threshold"):
            value = to_fraction(getattr(self, name))
            if not 0 < value <= 1:
                raise ValueError(f"{name} must be in (0, 1], got {getattr(self, name)}")
        if int(self.tolerance) != self.tolerance or self.tolerance < 0:
            raise ValueError(f"tolerance must be a non-negative integer, got {self.tolerance}")

    @property
    def locs_limit(self):
        return to_fraction(self.locs_threshold)

    @property
    def pa_limit(self):
        return to_fraction(self.pa_threshold)
