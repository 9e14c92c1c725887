"""
Precision / recall / F-measure across match tolerances.
"""

import os

import pandas as pd

from src.utils import ensure_dir
from src.seg_engine.config import (
    DPI_DEFAULT,
    MATPLOTLIB_BACKEND,
    CANVAS_WIDTH_INCHES,
    CANVAS_HEIGHT_INCHES,
    LAYOUT_PAD,
    TITLE_SIZE,
    TITLE_PAD,
    LABEL_SIZE,
    TICK_LABEL_SIZE,
    LEGEND_FONT_SIZE,
    MARKER_SIZE,
    LINE_WIDTH,
    GRID_ALPHA,
    PRECISION_COLOR,
    RECALL_COLOR,
    F_MEASURE_COLOR,
)


def make_figure(plt, width=None, height=None):
    width = width if width is not None else CANVAS_WIDTH_INCHES
    height = height if height is not None else CANVAS_HEIGHT_INCHES
    fig, ax = plt.subplots(figsize=(width, height), constrained_layout=True)
    fig.get_layout_engine().set(w_pad=LAYOUT_PAD, h_pad=LAYOUT_PAD)
    return fig, ax


def style_axes(ax, title, x_label, y_label, show_grid=True):
    ax.set_title(title, fontsize=TITLE_SIZE, pad=TITLE_PAD)
    ax.set_xlabel(x_label, fontsize=LABEL_SIZE)
    ax.set_ylabel(y_label, fontsize=LABEL_SIZE)
    ax.tick_params(axis="both", labelsize=TICK_LABEL_SIZE)
    if show_grid:
        ax.grid(True, alpha=GRID_ALPHA, linewidth=0.6)


def save_plot(fig, plt, png_path, dpi):
    ensure_dir(os.path.dirname(png_path) or ".")
    fig.savefig(png_path, dpi=dpi)
    plt.close(fig)
    return png_path


def plot_tolerance_sweep(df, png_path, title="Match quality by tolerance", dpi=DPI_DEFAULT):
    """
    Line chart of the sweep frame; undefined ratios leave gaps.

    Returns:
        The PNG path, or None for an empty frame.
    """
    if df.empty:
        return None
    import matplotlib
    matplotlib.use(MATPLOTLIB_BACKEND)
    import matplotlib.pyplot as plt

    fig, ax = make_figure(plt)
    x = pd.to_numeric(df["tolerance"], errors="coerce")
    for column, label, color in (
        ("precision", "Precision", PRECISION_COLOR),
        ("recall", "Recall", RECALL_COLOR),
        ("f_measure", "F-measure", F_MEASURE_COLOR),
    ):
        y = pd.to_numeric(df[column], errors="coerce")
        ax.plot(x, y, marker="o", markersize=MARKER_SIZE, linewidth=LINE_WIDTH, color=color, label=label)
    ax.set_ylim(0.0, 1.05)
    ax.set_xticks(sorted(x.dropna().astype(int).unique()))
    style_axes(ax, title, "Tolerance (IR statements)", "Score")
    ax.legend(fontsize=LEGEND_FONT_SIZE)
    return save_plot(fig, plt, png_path, dpi)
