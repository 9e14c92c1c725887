from fractions import Fraction

import pytest

from src.seg_engine import (
    Emo,
    SegmentationConfig,
    Variant,
    ccb,
    cec,
    esc,
    gsi,
    infer_signature,
    rank,
    sddc,
    segment,
)
from src.seg_graph import build_sdg, dump_sdg, is_segment
from src.seg_ir import parse_ir

from .conftest import LAYERED_IR, NESTED_IR, STRAIGHT_IR


# --- config ---

@pytest.mark.parametrize("kwargs", [
    {"locs_threshold": 0},
    {"locs_threshold": 1.5},
    {"pa_threshold": -0.1},
    {"tolerance": -1},
    {"tolerance": 1.5},
])
def test_config_rejects_out_of_range(kwargs):
    with pytest.raises(ValueError):
        SegmentationConfig(**kwargs)


def test_config_limits_are_exact():
    config = SegmentationConfig()
    assert config.locs_limit == Fraction(41, 100)
    assert config.pa_limit == Fraction(34, 100)
    assert SegmentationConfig(locs_threshold=1).locs_limit == 1


# --- contraction activities ---

def test_ccb_innermost_first(fib_sdg):
    g = fib_sdg.copy()
    result = ccb(g, 19)
    assert result.blocks == [21, 19]
    assert result.absorbed == [22, 20, 21]
    assert g.members_of(19) == {19, 20, 21, 22}
    assert all(c.edge_kind == "control" for c in result.contractions)


def test_ccb_skips_sealed_vertices(fib_sdg):
    g = fib_sdg.copy()
    ccb(g, 8)
    result = ccb(g, 3, skip={8})
    assert 8 in g
    assert g.members_of(3) == {3, 4, 5, 6, 7}
    assert result.blocks == [5, 3]


def test_ccb_of_leaf_changes_nothing(fib_sdg):
    g = fib_sdg.copy()
    assert not ccb(g, 13).changed
    assert dump_sdg(g) == dump_sdg(fib_sdg)


def test_esc_pulls_single_use_sources(fib_sdg):
    g = fib_sdg.copy()
    ccb(g, 15)
    result = esc(g, 15)
    assert result.absorbed == [14]
    assert g.members_of(15) == {14, 15, 16, 17, 18}
    assert result.contractions[0].edge_kind == "data"


def test_esc_stays_in_region(region_program):
    g = build_sdg(region_program)
    result = esc(g, 4)
    assert result.absorbed == [3]
    assert 1 in g


def test_esc_leaves_sealed_sources(fib_sdg):
    g = fib_sdg.copy()
    ccb(g, 15)
    assert not esc(g, 15, sealed={14}).changed


def test_sddc_defers_competing_long_chains(nested_sdg):
    g = nested_sdg.copy()
    ccb(g, 9)
    esc(g, 9)
    result = sddc(g, 9)
    assert sorted(c.path for c in result.deferred) == [(5, 6, 9), (7, 8, 9)]
    assert result.absorbed == [15, 16]


def test_sddc_merges_outgoing_unit_chain_into_sink(fib_sdg):
    g = fib_sdg.copy()
    ccb(g, 8)
    esc(g, 8)
    ccb(g, 3)
    esc(g, 3)
    result = sddc(g, 3)
    assert result.absorbed == [13]
    assert g.members_of(3) == frozenset(range(1, 14))


# --- pipeline ---

def test_fib_opportunity(fib_program):
    graph, emos = segment(fib_program)
    assert len(emos) == 1
    emo = emos[0]
    assert emo.root == 3
    assert emo.members == frozenset(range(1, 14))
    assert emo.ir_span == (1, 13)
    assert emo.params == ()
    assert emo.returns == ("b",)
    assert emo.score == Fraction(1, 3)
    assert emo.variants == [Variant("inner", frozenset(range(6, 13)), "LoCS 0.2500")]
    assert graph.sealed == {3}


def test_fib_partition(fib_program):
    graph, _ = segment(fib_program)
    assert graph.partition() == [[0], list(range(1, 14)), list(range(14, 19)), list(range(19, 23))]


def test_looser_threshold_adds_prime_loop(fib_program):
    _, emos = segment(fib_program, SegmentationConfig(locs_threshold=0.6))
    assert [e.ir_span for e in emos] == [(1, 13), (14, 18)]
    assert emos[1].score == Fraction(1, 2)
    assert emos[1].returns == ("i",)


def test_nested_opportunity(nested_program):
    graph, emos = segment(nested_program, method="nested")
    assert len(emos) == 1
    emo = emos[0]
    assert emo.members == {4, 9, 10, 11, 12, 13, 14, 15, 16}
    assert emo.params == ("d", "f")
    assert emo.returns == ()
    assert emo.method == "nested"
    assert [v.kind for v in emo.variants] == ["parent", "chain", "chain"]
    assert emo.variants[0].members == frozenset(range(3, 19))
    assert emo.variants[0].note == "PA 0.4000"
    assert [v.members for v in emo.variants[1:]] == [{5, 6}, {7, 8}]
    assert graph.partition() == [[0, 1, 2, 3, 5, 6, 7, 8, 17, 18, 19], [4, 9, 10, 11, 12, 13, 14, 15, 16]]


def test_opportunities_are_segments_of_the_original_graph(fib_program, nested_program):
    for program in (fib_program, nested_program):
        g0 = build_sdg(program)
        _, emos = segment(program, SegmentationConfig(locs_threshold=0.6))
        for emo in emos:
            assert is_segment(g0, emo.members)


def test_cec_leaves_input_graph(fib_sdg):
    before = dump_sdg(fib_sdg)
    graph, emos = cec(fib_sdg)
    assert dump_sdg(fib_sdg) == before
    assert len(graph) == 4
    assert [e.root for e in emos] == [3]


def test_straight_line_program_has_no_opportunity():
    graph, emos = segment(parse_ir(STRAIGHT_IR))
    assert emos == []
    assert graph.partition() == [[0], [1], [2]]


def test_empty_program():
    graph, emos = segment(parse_ir(""))
    assert emos == []
    assert graph.partition() == []


def test_gsi_keeps_parent_apart(nested_sdg):
    worklist = [1, 3]
    root, variants = gsi(nested_sdg.copy(), 9, worklist)
    assert root == 9
    assert worklist == [1, 3]
    assert [v.kind for v in variants] == ["parent"]


def test_gsi_climbs_under_loose_affinity(nested_sdg):
    worklist = [1, 3]
    root, variants = gsi(nested_sdg.copy(), 9, worklist, SegmentationConfig(pa_threshold=0.5))
    # PA 2/5 lets 9 into 3; block 1 then merges without a PA check
    assert root == 1
    assert variants == []
    assert worklist == []


def test_gsi_climbs_to_outermost_block():
    g = build_sdg(parse_ir(LAYERED_IR))
    worklist = [1, 4]
    assert gsi(g.copy(), 7, worklist) == (1, [])
    assert worklist == []
    # from the middle block only the outer one is left to climb
    worklist = [1]
    assert gsi(g.copy(), 4, worklist) == (1, [])
    assert worklist == []


def test_gsi_stops_at_secondary_parent(fib_sdg):
    worklist = [3]
    assert gsi(fib_sdg.copy(), 8, worklist) == (8, [])
    assert worklist == [3]


def test_infer_signature(fib_sdg):
    assert infer_signature(fib_sdg, range(1, 14)) == ((), ("b",))
    assert infer_signature(fib_sdg, range(8, 13)) == (("a", "b", "i", "n"), ("b",))


def test_infer_signature_of_nested_opportunity():
    members = {4, 9, 10, 11, 12, 13, 14, 15, 16}
    assert infer_signature(build_sdg(parse_ir(NESTED_IR)), members) == (("d", "f"), ())

    # 16 hands u to the loop body outside block 3
    lines = NESTED_IR.splitlines()
    lines[16] = "    assign u s"
    lines[19] = "  assign a a u"
    g = build_sdg(parse_ir("\n".join(lines) + "\n"))
    assert g.data.has_edge(16, 19)
    assert infer_signature(g, members) == (("d", "f"), ("u",))


def _emo(members, score):
    return Emo(min(members), frozenset(members), (), (), Fraction(score))


def test_rank_order():
    a = _emo({5, 6}, "1/3")
    b = _emo({1, 2, 3}, "1/3")
    c = _emo({0}, "1/5")
    d = _emo({8, 9}, "1/3")
    assert rank([a, b, c, d]) == [c, b, a, d]
