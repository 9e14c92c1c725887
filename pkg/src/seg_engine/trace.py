"""
Step-by-step record of a segmentation run.

Every graph-changing activity (ccb, esc, sddc) becomes a numbered TraceStep
with a DOT snapshot of the graph after the step; gate decisions are kept as
notes between steps. Step 0 is the SDG before any contraction.
"""

import os
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from src.seg_graph.dot import to_dot, render_svg
from src.utils import ensure_dir, format_index_set
from .config import DOT_SUFFIX, SVG_SUFFIX, TRACE_INITIAL_STEP, TRACE_LOG_FILE_NAME


@dataclass(frozen=True)
class Contraction:
    u: int
    v: int
    edge_kind: str   # "control" or "data"
    label: int
    region_u: int
    region_v: int

    def __str__(self):
        return f"({self.u},{self.v}) {self.edge_kind} -> {self.label}"


@dataclass
class TraceStep:
    number: int
    activity: str
    target: Optional[int] = None
    blocks: Tuple[int, ...] = ()
    absorbed: Tuple[int, ...] = ()
    contractions: Tuple[Contraction, ...] = ()
    note: str = ""
    dot: str = ""

    @property
    def file_stem(self):
        if self.target is None:
            return f"step-{self.number:03d}-{self.activity}"
        return f"step-{self.number:03d}-{self.activity}-{self.target}"

    def describe(self):
        parts = [f"step {self.number:03d} {self.activity}"]
        if self.target is not None:
            parts.append(f"at {self.target}")
        if self.blocks:
            parts.append(f"blocks [{','.join(str(b) for b in self.blocks)}]")
        if self.absorbed:
            parts.append(f"absorbed [{','.join(str(a) for a in self.absorbed)}]")
        if self.note:
            parts.append(f"- {self.note}")
        return " ".join(parts)


@dataclass
class ContractionTrace:
    steps: List[TraceStep] = field(default_factory=list)
    # ordered log lines: step descriptions and notes
    lines: List[str] = field(default_factory=list)
    sealed: set = field(default_factory=set)

    def start(self, g):
        self.steps.clear()
        self.lines.clear()
        self.sealed = set()
        self._append(TraceStep(0, TRACE_INITIAL_STEP, note=f"{len(g)} vertices"), g)

    def record(self, activity, g, result):
        """Record a graph-changing step; results without contractions are skipped."""
        if not result.contractions:
            return None
        step = TraceStep(
            number=len(self.steps),
            activity=activity,
            target=result.target,
            blocks=tuple(result.blocks),
            absorbed=tuple(result.absorbed),
            contractions=tuple(result.contractions),
        )
        return self._append(step, g)

    def note(self, message):
        self.lines.append(f"  note: {message}")

    def seal(self, label):
        self.sealed.add(label)

    def _append(self, step, g):
        step.dot = to_dot(g, name=step.file_stem.replace("-", "_"), sealed=self.sealed)
        self.steps.append(step)
        self.lines.append(step.describe())
        for contraction in step.contractions:
            self.lines.append(f"    {contraction}")
        if step.target is not None and step.target in g:
            self.lines.append(f"    vertex {step.target} holds {format_index_set(g.members_of(step.target))}")
        return step

    def contractions(self):
        return [c for step in self.steps for c in step.contractions]

    def block_order(self):
        """(target, blocks, absorbed) of every ccb step, in order."""
        return [(s.target, s.blocks, s.absorbed) for s in self.steps if s.activity == "ccb"]

    def to_log(self):
        return "\n".join(self.lines) + "\n"

    def write(self, out_dir, svg=False):
        """
        Write one DOT file per step plus the text log.

        Returns:
            List of written DOT paths.
        """
        ensure_dir(out_dir)
        paths = []
        for step in self.steps:
            path = os.path.join(out_dir, step.file_stem + DOT_SUFFIX)
            with open(path, "w", encoding="utf-8") as f:
                f.write(step.dot)
            paths.append(path)
            if svg:
                render_svg(step.dot, os.path.join(out_dir, step.file_stem + SVG_SUFFIX))
        with open(os.path.join(out_dir, TRACE_LOG_FILE_NAME), "w", encoding="utf-8") as f:
            f.write(self.to_log())
        return paths
