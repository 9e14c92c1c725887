import os
import shutil
import pandas as pd
from rich.progress import Progress, SpinnerColumn, TimeElapsedColumn, TimeRemainingColumn, MofNCompleteColumn, BarColumn


def remove_duplicates_preserve_order(seq):
    seen = set()
    result = []
    for item in seq:
        if item not in seen:
            seen.add(item)
            result.append(item)
    return result


def ensure_dir(path, replace=False):
    if os.path.exists(path):
        if replace:
            shutil.rmtree(path)
        else:
            return
    os.makedirs(path)


def format_ratio(value, decimals):
    """Render a ratio with fixed decimals; undefined ratios render as 'n/a'."""
    if value is None:
        return "n/a"
    return f"{float(value):.{decimals}f}"


def format_index_set(indices):
    """
    Compact rendering of a set of IR indices, e.g. {1,2,3,5} -> "1-3,5".

    Args:
        indices: iterable of non-negative ints.

    Returns:
        String of comma separated runs; empty string for an empty set.
    """
    values = sorted(set(indices))
    if not values:
        return ""
    runs = []
    start = prev = values[0]
    for v in values[1:]:
        if v == prev + 1:
            prev = v
            continue
        runs.append((start, prev))
        start = prev = v
    runs.append((start, prev))
    return ",".join(str(a) if a == b else f"{a}-{b}" for a, b in runs)


def parse_index_set(text):
    """Inverse of format_index_set."""
    result = set()
    text = str(text).strip()
    if not text or text == "nan":
        return result
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            result.update(range(int(lo), int(hi) + 1))
        else:
            result.add(int(part))
    return result


def read_csv_to_df(csv_path, **kwargs):
    if not os.path.exists(csv_path):
        raise FileNotFoundError(f"CSV file not found: {csv_path}")

    try:
        df = pd.read_csv(csv_path, **kwargs)
    except pd.errors.EmptyDataError:
        return pd.DataFrame()
    except Exception as e:
        raise RuntimeError(f"Failed to read CSV file {csv_path}: {e}")

    return df


def write_df_to_csv(df, csv_file_path, **kwargs):
    if "index" not in kwargs:
        kwargs["index"] = False
    df.to_csv(csv_file_path, **kwargs)


def create_progress_bar():
    return Progress(
        SpinnerColumn(),
        "[progress.description]{task.description}",
        BarColumn(),
        MofNCompleteColumn(),
        "[progress.percentage]{task.percentage:>3.0f}%",
        TimeElapsedColumn(),
        TimeRemainingColumn(),
        refresh_per_second=2,
    )
