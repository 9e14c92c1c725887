import os

from src.seg_engine import ContractionTrace, SegmentationConfig, segment
from src.seg_graph import to_dot
from src.seg_graph.config import SEALED_FILL_COLOR
from src.seg_ir import parse_ir

from .conftest import STRAIGHT_IR


FIB_STEMS = [
    "step-000-sdg",
    "step-001-ccb-19",
    "step-002-ccb-15",
    "step-003-esc-15",
    "step-004-ccb-8",
    "step-005-esc-8",
    "step-006-ccb-3",
    "step-007-esc-3",
    "step-008-sddc-3",
]


def traced(program, config=None):
    trace = ContractionTrace()
    segment(program, config, trace=trace)
    return trace


def test_fib_steps(fib_program):
    trace = traced(fib_program)
    assert [s.file_stem for s in trace.steps] == FIB_STEMS
    assert [s.number for s in trace.steps] == list(range(9))


def test_fib_block_order(fib_program):
    trace = traced(fib_program)
    assert trace.block_order() == [
        (19, (21, 19), (22, 20, 21)),
        (15, (16, 15), (17, 16, 18)),
        (8, (8,), (9, 10, 11, 12)),
        (3, (5, 3), (8, 4, 5)),
    ]


def test_fib_absorbed_sources(fib_program):
    steps = {s.file_stem: s for s in traced(fib_program).steps}
    assert steps["step-003-esc-15"].absorbed == (14,)
    assert steps["step-005-esc-8"].absorbed == (6, 7)
    assert steps["step-007-esc-3"].absorbed == (1, 2)
    assert steps["step-008-sddc-3"].absorbed == (13,)


def test_contractions_carry_regions(fib_program):
    trace = traced(fib_program)
    for c in trace.contractions():
        if c.edge_kind == "data":
            assert c.region_u == c.region_v
    assert len(trace.contractions()) == sum(len(s.absorbed) for s in trace.steps)


def test_log_holds_steps_and_notes(fib_program):
    log = traced(fib_program).to_log()
    lines = log.splitlines()
    assert lines[0] == "step 000 sdg - 23 vertices"
    assert "  note: block 19 rejected (LoCS not computed), collapsed" in lines
    assert "  note: block 16 rejected (LoCS not computed), left for parent 15" in lines
    assert "  note: block 8 accepted, LoCS 0.2500" in lines
    assert "step 001 ccb at 19 blocks [21,19] absorbed [22,20,21]" in lines
    assert "    vertex 3 holds 1-13" in lines


def test_first_snapshot_is_the_sdg(fib_program, fib_sdg):
    trace = traced(fib_program)
    assert trace.steps[0].dot == to_dot(fib_sdg, name="step_000_sdg")


def test_sealed_vertices_are_highlighted(fib_program):
    trace = traced(fib_program, SegmentationConfig(locs_threshold=0.6))
    steps = {s.file_stem: s for s in trace.steps}
    assert SEALED_FILL_COLOR not in steps["step-003-esc-15"].dot
    assert SEALED_FILL_COLOR in steps["step-004-ccb-8"].dot


def test_write(fib_program, tmp_path):
    trace = traced(fib_program)
    out_dir = str(tmp_path / "trace")
    paths = trace.write(out_dir)
    assert [os.path.basename(p) for p in paths] == [stem + ".dot" for stem in FIB_STEMS]
    assert sorted(os.listdir(out_dir)) == sorted([stem + ".dot" for stem in FIB_STEMS] + ["trace.log"])
    with open(os.path.join(out_dir, "trace.log"), encoding="utf-8") as f:
        assert f.read() == trace.to_log()


def test_restart_clears_previous_run(fib_program):
    trace = traced(fib_program)
    segment(parse_ir(STRAIGHT_IR), trace=trace)
    assert [s.file_stem for s in trace.steps] == ["step-000-sdg"]
    assert trace.block_order() == []
