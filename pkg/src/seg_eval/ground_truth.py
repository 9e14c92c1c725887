from dataclasses import dataclass
from typing import List, Optional

from src.errors import GroundTruthError


@dataclass(frozen=True)
class Mark:
    method: Optional[str]   # None matches any method
    start: int
    end: int


def parse_mark(line, line_no=None):
    parts = line.split()
    if len(parts) == 2:
        method, start, end = None, parts[0], parts[1]
    elif len(parts) == 3:
        method, start, end = parts
    else:
        raise GroundTruthError(f"expected 'method start end', got {line.strip()!r}", line=line_no)
    if not (start.isdigit() and end.isdigit()):
        raise GroundTruthError(f"start and end must be non-negative integers, got {start!r} {end!r}", line=line_no)
    start, end = int(start), int(end)
    if start > end:
        raise GroundTruthError(f"start {start} is after end {end}", line=line_no)
    return Mark(method, start, end)


def load_ground_truth(text) -> List[Mark]:
    """
    One mark per line: "method start end" (IR indices, inclusive).
    Blank lines and '#' comments are skipped; "start end" marks any method.
    """
    marks = []
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        marks.append(parse_mark(line, line_no))
    return marks


def read_ground_truth(path):
    with open(path, "r", encoding="utf-8") as f:
        return load_ground_truth(f.read())
