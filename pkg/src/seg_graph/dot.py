import os
import shutil

import graphviz

from src.logger import Logger
from src.utils import format_index_set
from .config import (
    CONTROL_EDGE_LABEL,
    CONTROL_EDGE_STYLE,
    DATA_EDGE_LABEL,
    DATA_EDGE_STYLE,
    PRIMARY_SHAPE,
    SECONDARY_SHAPE,
    PLAIN_SHAPE,
    MERGED_FILL_COLOR,
    SEALED_FILL_COLOR,
    DEFAULT_FILL_COLOR,
    RANK_DIR,
    LAYOUT_ENGINE,
)
from .sdg import Sdg, VertexKind


SHAPES = {
    VertexKind.PRIMARY: PRIMARY_SHAPE,
    VertexKind.SECONDARY: SECONDARY_SHAPE,
    VertexKind.PLAIN: PLAIN_SHAPE,
}


def vertex_label(g: Sdg, label):
    members = g.vertices[label].members
    if members == {label}:
        return str(label)
    return f"{label}: {format_index_set(members)}"


def build_digraph(g: Sdg, name="sdg", sealed=()):
    """
    graphviz.Digraph of an SDG. Vertices and edges are emitted in sorted
    order so the DOT source is identical for identical graphs.
    """
    sealed = set(sealed)
    dot = graphviz.Digraph(name=name)
    dot.engine = LAYOUT_ENGINE
    dot.attr(rankdir=RANK_DIR)

    for label in g.labels():
        vertex = g.vertices[label]
        if label in sealed:
            fill = SEALED_FILL_COLOR
        elif len(vertex.members) > 1:
            fill = MERGED_FILL_COLOR
        else:
            fill = DEFAULT_FILL_COLOR
        dot.node(str(label), vertex_label(g, label), shape=SHAPES[vertex.kind], style='filled', fillcolor=fill)

    for u, v in sorted(g.control.edges):
        dot.edge(str(u), str(v), label=CONTROL_EDGE_LABEL, style=CONTROL_EDGE_STYLE)
    for u, v in sorted(g.data.edges):
        dot.edge(str(u), str(v), label=DATA_EDGE_LABEL, style=DATA_EDGE_STYLE)
    return dot


def to_dot(g: Sdg, name="sdg", sealed=()):
    return build_digraph(g, name, sealed).source


def write_dot(g: Sdg, path, name="sdg", sealed=()):
    with open(path, "w", encoding="utf-8") as f:
        f.write(to_dot(g, name, sealed))
    return path


def render_svg(dot_source, svg_file_path):
    """
    Render DOT source to SVG with the graphviz binary.

    Returns:
        The SVG path, or None when the 'dot' binary is not installed.
    """
    if not shutil.which('dot'):
        Logger().warning(f"Graphviz not installed, skipping {svg_file_path}")
        return None
    source = graphviz.Source(dot_source, engine=LAYOUT_ENGINE)
    svg_file_path_without_suffix = svg_file_path.rsplit('.', 1)[0]
    source.render(svg_file_path_without_suffix, format='svg', view=False, cleanup=True)
    if not (os.path.exists(svg_file_path) and os.path.getsize(svg_file_path) > 0):
        raise RuntimeError(f"SVG file was not generated or is empty: {svg_file_path}")
    return svg_file_path


def dump_sdg(g: Sdg):
    """Line-ordered text listing of vertices then edges, for diffing."""
    lines = []
    for label in g.labels():
        vertex = g.vertices[label]
        lines.append(f"vertex {label} {vertex.kind.value} {format_index_set(vertex.members)}")
    for u, v in sorted(g.control.edges):
        lines.append(f"control {u} {v}")
    for u, v in sorted(g.data.edges):
        lines.append(f"data {u} {v} {','.join(sorted(g.edge_vars(u, v)))}")
    return "\n".join(lines) + "\n"
