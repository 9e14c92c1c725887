"""
Rendering defaults for structure dependence graphs.
"""

# --- Edge styling ---
# Label drawn on control edges.
CONTROL_EDGE_LABEL = "C"
# Line style of control edges.
CONTROL_EDGE_STYLE = "dashed"
# Label drawn on data edges.
DATA_EDGE_LABEL = "D"
# Line style of data edges.
DATA_EDGE_STYLE = "solid"

# --- Vertex styling ---
# Shape per vertex kind (If / Loop / DoCase are primary control vertices).
PRIMARY_SHAPE = "diamond"
SECONDARY_SHAPE = "hexagon"
PLAIN_SHAPE = "ellipse"
# Fill color of vertices holding more than one IR statement.
MERGED_FILL_COLOR = "#FFE08A"
# Fill color of vertices sealed as extracted segments.
SEALED_FILL_COLOR = "#9FD3A8"
# Fill color of single-statement vertices.
DEFAULT_FILL_COLOR = "#FFFFFF"

# --- Layout ---
# Graphviz rank direction.
RANK_DIR = "TB"
# Layout engine used for SVG rendering.
LAYOUT_ENGINE = "dot"
