"""
Randomized invariants of the segmentation pipeline over sampled IR programs.
"""

import random

import pytest

from src.seg_engine import (
    ContractionTrace,
    SegmentationConfig,
    analyze_block,
    locs,
    parent_affinity,
    segment,
    suggestions_frame,
)
from src.seg_eval import match_opportunities
from src.seg_front import FrontendOptions, translate
from src.seg_graph import block_members, build_sdg, is_segment, primary_control_vertices

from .samplers import random_program, random_toy_source


SEEDS = range(200)
CONFIGS = [SegmentationConfig(), SegmentationConfig(locs_threshold=0.8, pa_threshold=0.6, no_relay_extract=True)]


class PartitionCheckingTrace(ContractionTrace):
    """Asserts after every step that the vertices partition the program."""

    def __init__(self, size):
        super().__init__()
        self.size = size

    def _append(self, step, g):
        seen = set()
        for label in g.labels():
            members = g.members_of(label)
            assert label in members
            assert not members & seen
            seen |= members
        assert seen == set(range(self.size))
        return super()._append(step, g)


@pytest.mark.parametrize("config", CONFIGS)
@pytest.mark.parametrize("seed", SEEDS)
def test_pipeline_invariants(seed, config):
    program = random_program(seed, max_statements=40)
    g0 = build_sdg(program)
    trace = PartitionCheckingTrace(len(program))
    graph, emos = segment(program, config, trace=trace)

    assert sorted(i for part in graph.partition() for i in part) == list(range(len(program)))
    covered = set()
    for emo in emos:
        assert is_segment(g0, emo.members)
        assert emo.root in emo.members
        assert not emo.members & covered
        covered |= emo.members
        assert 0 < emo.score < config.locs_limit
    for contraction in trace.contractions():
        if contraction.edge_kind == "data":
            assert contraction.region_u == contraction.region_v
    assert [e.score for e in emos] == sorted(e.score for e in emos)


@pytest.mark.parametrize("seed", range(60))
def test_runs_are_deterministic(seed):
    program = random_program(seed, max_statements=40)
    first, second = ContractionTrace(), ContractionTrace()
    _, emos_a = segment(program, trace=first)
    _, emos_b = segment(program, trace=second)
    assert suggestions_frame(emos_a).equals(suggestions_frame(emos_b))
    assert first.to_log() == second.to_log()
    assert [s.dot for s in first.steps] == [s.dot for s in second.steps]


def _reaches(g, scope, source, target):
    stack, seen = [source], set()
    while stack:
        node = stack.pop()
        for succ in g.data.successors(node):
            if succ == target:
                return True
            if succ in scope and succ not in seen:
                seen.add(succ)
                stack.append(succ)
    return False


@pytest.mark.parametrize("seed", range(100))
def test_block_census_against_brute_force(seed):
    g = build_sdg(random_program(seed, max_statements=40))
    for v in primary_control_vertices(g):
        a = analyze_block(g, v)
        scope = a.members | a.exclusive_sources
        for relay, share in a.relay_share.items():
            expected = {p for p in a.producers if p != relay and _reaches(g, scope, p, relay)}
            assert share == expected
        value = locs(a, no_relay_extract=True)
        if value is not None:
            assert 0 < value <= 1
        for parent in primary_control_vertices(g):
            if parent != v and v in block_members(g, parent):
                pa = parent_affinity(g, parent, v)
                assert pa is None or 0 <= pa <= 1


@pytest.mark.parametrize("seed", range(40))
def test_sampled_sources_segment_cleanly(seed):
    source, _ = random_toy_source(seed, max_statements=30)
    program, source_map = translate(source, FrontendOptions())
    _, emos = segment(program, method="sampled")
    df = suggestions_frame(emos, source_map=source_map)
    assert len(df) == len(emos)
    assert (df['src_start'] <= df['src_end']).all()


@pytest.mark.parametrize("seed", range(100))
def test_optimal_matching_never_loses_to_greedy(seed):
    rng = random.Random(seed)

    def span():
        start = rng.randint(0, 30)
        return ("m", start, start + rng.randint(0, 8))

    marks = [span() for _ in range(rng.randint(0, 8))]
    suggested = [span() for _ in range(rng.randint(0, 8))]
    tolerance = rng.randint(0, 3)
    greedy = match_opportunities(suggested, marks, tolerance)
    optimal = match_opportunities(suggested, marks, tolerance, strategy="optimal")
    assert greedy.tp <= optimal.tp
    assert greedy.tp + greedy.fn == optimal.tp + optimal.fn == len(marks)
