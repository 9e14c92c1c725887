import os
from fractions import Fraction

import pytest

from src.errors import GroundTruthError
from src.seg_engine import Suggestion, segment, suggestions_frame, read_suggestions, write_suggestions
from src.seg_eval import (
    Mark,
    as_span,
    deviation,
    load_ground_truth,
    match_opportunities,
    parse_mark,
    plot_tolerance_sweep,
    read_ground_truth,
    sweep_frame,
    tolerance_sweep,
)
from src.seg_front import translate

from .conftest import FIB_SOURCE


MARKS = [Mark("m", s, e) for s, e in [
    (1, 10), (20, 30), (40, 45), (50, 60), (70, 75), (80, 90),
    (100, 110), (120, 125), (130, 140), (150, 160), (170, 180),
]]
SUGGESTED = [("m", s, e) for s, e in [
    (1, 10), (21, 30), (40, 47), (53, 60), (70, 79), (81, 91), (102, 108), (200, 210), (131, 143),
]] + [("other", 150, 160)]


# --- ground truth ---

def test_parse_mark_forms():
    assert parse_mark("fib 1 13") == Mark("fib", 1, 13)
    assert parse_mark("4 9") == Mark(None, 4, 9)


@pytest.mark.parametrize("line", ["fib 1", "fib 1 2 3", "fib a 3", "fib -1 3", "fib 9 3"])
def test_parse_mark_rejects(line):
    with pytest.raises(GroundTruthError):
        parse_mark(line, 7)


def test_load_ground_truth_skips_comments():
    text = "# method start end\n\nfib 1 13  # the else branch\n  sum 2 5\n"
    assert load_ground_truth(text) == [Mark("fib", 1, 13), Mark("sum", 2, 5)]


def test_load_ground_truth_reports_line():
    with pytest.raises(GroundTruthError, match="line 3"):
        load_ground_truth("fib 1 13\n\nfib 13 1\n")


def test_read_ground_truth(write_file):
    path = write_file("marks.txt", "fib 1 13\n")
    assert read_ground_truth(path) == [Mark("fib", 1, 13)]


# --- spans and deviation ---

def test_as_span_accepts_every_shape():
    suggestion = Suggestion("fib", 1, 1, 13, frozenset(range(1, 14)))
    assert as_span(Mark("fib", 1, 13)) == ("fib", 1, 13)
    assert as_span(suggestion) == ("fib", 1, 13)
    assert as_span((1, 13)) == (None, 1, 13)
    assert as_span(("fib", 1, 13)) == ("fib", 1, 13)


def test_as_span_of_emo(fib_program):
    _, emos = segment(fib_program, method="fib")
    assert as_span(emos[0]) == ("fib", 1, 13)


def test_deviation():
    assert deviation(("m", 21, 30), ("m", 20, 30), 1) == 1
    assert deviation(("m", 21, 30), ("m", 20, 30), 0) is None
    assert deviation(("m", 81, 91), ("m", 80, 90), 1) == 2
    assert deviation(("a", 1, 2), ("b", 1, 2), 3) is None
    assert deviation((None, 1, 2), ("b", 1, 2), 0) == 0


# --- matching ---

@pytest.mark.parametrize("tolerance, tp, precision, recall, f_measure", [
    (0, 1, Fraction(1, 10), Fraction(1, 11), Fraction(2, 21)),
    (1, 3, Fraction(3, 10), Fraction(3, 11), Fraction(2, 7)),
    (2, 5, Fraction(1, 2), Fraction(5, 11), Fraction(10, 21)),
    (3, 7, Fraction(7, 10), Fraction(7, 11), Fraction(2, 3)),
])
def test_match_corpus(tolerance, tp, precision, recall, f_measure):
    report = match_opportunities(SUGGESTED, MARKS, tolerance)
    assert (report.tp, report.fp, report.fn) == (tp, 10 - tp, 11 - tp)
    assert (report.precision, report.recall, report.f_measure) == (precision, recall, f_measure)


def test_match_is_one_to_one():
    report = match_opportunities([(1, 10), (1, 10)], [Mark("m", 1, 10)], 0)
    assert (report.tp, report.fp, report.fn) == (1, 1, 0)
    assert report.pairs == ((0, 0),)


def test_greedy_and_optimal_differ():
    marks = [("m", 10, 20), ("m", 12, 20)]
    suggested = [("m", 11, 20), ("m", 9, 20)]
    assert match_opportunities(suggested, marks, 2).tp == 1
    optimal = match_opportunities(suggested, marks, 2, strategy="optimal")
    assert optimal.tp == 2
    assert optimal.pairs == ((0, 1), (1, 0))


def test_optimal_prefers_smaller_deviation():
    marks = [("m", 10, 20)]
    suggested = [("m", 11, 21), ("m", 10, 21)]
    assert match_opportunities(suggested, marks, 1, strategy="optimal").pairs == ((1, 0),)


def test_empty_inputs():
    report = match_opportunities([], [Mark("m", 1, 4)], 1)
    assert (report.tp, report.fp, report.fn) == (0, 0, 1)
    assert report.precision is None
    assert report.recall == 0
    assert report.f_measure is None
    assert "precision: n/a" in report.to_text()
    assert "recall: 0.0000" in report.to_text()


def test_bad_arguments():
    with pytest.raises(ValueError):
        match_opportunities([], [], -1)
    with pytest.raises(ValueError):
        match_opportunities([], [], 1, strategy="hungarian")


def test_report_text():
    text = match_opportunities(SUGGESTED, MARKS, 2).to_text()
    assert text.splitlines() == [
        "tolerance: 2",
        "tp: 5",
        "fp: 5",
        "fn: 6",
        "precision: 0.5000",
        "recall: 0.4545",
        "f_measure: 0.4762",
    ]


# --- sweep ---

def test_sweep_frame():
    df = sweep_frame(tolerance_sweep(SUGGESTED, MARKS))
    assert df['tolerance'].tolist() == [0, 1, 2, 3]
    assert df['tp'].tolist() == [1, 3, 5, 7]
    assert df['f_measure'].tolist() == [0.0952, 0.2857, 0.4762, 0.6667]


def test_sweep_never_loses_matches():
    reports = tolerance_sweep(SUGGESTED, MARKS, tolerances=range(6))
    tps = [r.tp for r in reports]
    assert tps == sorted(tps)


def test_plot_tolerance_sweep(tmp_path):
    df = sweep_frame(tolerance_sweep(SUGGESTED, MARKS))
    path = plot_tolerance_sweep(df, str(tmp_path / "plots" / "sweep.png"))
    assert os.path.getsize(path) > 0
    assert plot_tolerance_sweep(df.iloc[0:0], str(tmp_path / "empty.png")) is None


# --- suggestions file ---

def test_suggestions_round_trip(tmp_path):
    program, source_map = translate(FIB_SOURCE)
    _, emos = segment(program, method="FiboPrime")
    df = suggestions_frame(emos, source_map=source_map)
    row = df.iloc[0]
    assert (row['method'], row['rank'], row['ir_start'], row['ir_end']) == ("FiboPrime", 1, 1, 13)
    assert (row['src_start'], row['src_end']) == (4, 16)
    assert row['returns'] == "b"
    assert row['variants'] == "inner:6-12 (LoCS 0.2500)"

    path = write_suggestions(df, str(tmp_path / "suggestions.csv"))
    [suggestion] = read_suggestions(path)
    assert suggestion == Suggestion("FiboPrime", 1, 1, 13, frozenset(range(1, 14)))
    report = match_opportunities([suggestion], [parse_mark("FiboPrime 1 13")], 0)
    assert report.tp == 1


def test_read_header_only_suggestions(tmp_path):
    path = write_suggestions(suggestions_frame([]), str(tmp_path / "none.csv"))
    assert read_suggestions(path) == []
