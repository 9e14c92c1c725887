from dataclasses import dataclass, field
from typing import Dict, Tuple

from src.errors import FileFormatError


@dataclass
class SourceMap:
    # key: IR index, value: (source line start, source line end), 1-based inclusive
    entries: Dict[int, Tuple[int, int]] = field(default_factory=dict)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, index):
        return index in self.entries

    def add(self, index, start, end):
        if index in self.entries:
            raise ValueError(f"IR index {index} already mapped")
        if start > end:
            raise ValueError(f"IR index {index}: source range {start}..{end} is reversed")
        self.entries[index] = (start, end)

    def map_range(self, lo, hi):
        return map_range(self, lo, hi)

    def to_text(self):
        return "".join(f"{i} {s} {e}\n" for i, (s, e) in sorted(self.entries.items()))


def map_range(source_map, lo, hi):
    """
    Covering source-line interval of the IR statements lo..hi.

    Raises:
        ValueError: lo > hi.
        KeyError: an index in lo..hi has no source range.
    """
    if lo > hi:
        raise ValueError(f"reversed IR range {lo}..{hi}")
    starts, ends = [], []
    for index in range(lo, hi + 1):
        if index not in source_map.entries:
            raise KeyError(f"IR index {index} is not mapped")
        start, end = source_map.entries[index]
        starts.append(start)
        ends.append(end)
    return min(starts), max(ends)


def parse_source_map(text):
    source_map = SourceMap()
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3 or not all(p.isdigit() for p in parts):
            raise FileFormatError(f"expected 'irIndex startLine endLine', got {line!r}", line=line_no)
        try:
            source_map.add(*(int(p) for p in parts))
        except ValueError as e:
            raise FileFormatError(str(e), line=line_no)
    return source_map


def read_source_map(path):
    with open(path, "r", encoding="utf-8") as f:
        return parse_source_map(f.read())


def write_source_map(source_map, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(source_map.to_text())
