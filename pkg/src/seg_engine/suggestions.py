from dataclasses import dataclass
from typing import FrozenSet, List, Optional

import pandas as pd

from src.errors import FileFormatError
from src.seg_front.source_map import map_range
from src.utils import format_index_set, parse_index_set, read_csv_to_df, write_df_to_csv
from .config import RATIO_DECIMALS


SUGGESTION_COLUMNS = [
    'method', 'rank', 'ir_start', 'ir_end', 'members', 'src_start', 'src_end',
    'params', 'returns', 'score', 'variants',
]


@dataclass(frozen=True)
class Suggestion:
    method: Optional[str]
    rank: int
    ir_start: int
    ir_end: int
    members: FrozenSet[int]


def suggestions_frame(emos, method=None, source_map=None):
    """One row per Emo, in the given (ranked) order."""
    rows = []
    for position, emo in enumerate(emos, start=1):
        start, end = emo.ir_span
        src_start = src_end = None
        if source_map is not None:
            src_start, src_end = map_range(source_map, start, end)
        rows.append({
            'method': method if method is not None else emo.method,
            'rank': position,
            'ir_start': start,
            'ir_end': end,
            'members': format_index_set(emo.members),
            'src_start': src_start,
            'src_end': src_end,
            'params': " ".join(emo.params),
            'returns': " ".join(emo.returns),
            'score': round(float(emo.score), RATIO_DECIMALS),
            'variants': "; ".join(str(v) for v in emo.variants),
        })
    df = pd.DataFrame(rows, columns=SUGGESTION_COLUMNS)
    df['src_start'] = df['src_start'].astype('Int64')
    df['src_end'] = df['src_end'].astype('Int64')
    return df


def write_suggestions(df, path):
    write_df_to_csv(df, path)
    return path


def read_suggestions(path) -> List[Suggestion]:
    df = read_csv_to_df(path, dtype={'method': str, 'members': str})
    if df.empty:
        return []
    missing = [c for c in ('method', 'rank', 'ir_start', 'ir_end', 'members') if c not in df.columns]
    if missing:
        raise FileFormatError(f"{path}: missing columns {', '.join(missing)}")

    suggestions = []
    for row_no, row in enumerate(df.itertuples(index=False), start=2):
        try:
            start, end = int(row.ir_start), int(row.ir_end)
            members = frozenset(parse_index_set(row.members)) or frozenset(range(start, end + 1))
            rank = int(row.rank)
        except (TypeError, ValueError) as e:
            raise FileFormatError(f"{path}: bad suggestion row: {e}", line=row_no)
        if start > end:
            raise FileFormatError(f"{path}: ir_start {start} after ir_end {end}", line=row_no)
        method = None if pd.isna(row.method) else str(row.method)
        suggestions.append(Suggestion(method, rank, start, end, members))
    return suggestions
