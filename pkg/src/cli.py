#!/usr/bin/env python3
"""
seg_tool command - Segmentation based extract method refactoring

Sub-commands translate toy-language sources to segment IR, validate IR,
build and draw the structure dependence graph, report block metrics,
segment methods into extract method opportunities and score suggestions
against ground truth.
"""

import argparse
import logging
import os
import sys
import traceback as tb
from pathlib import Path

import pandas as pd

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))
from src import __version__
from src.errors import InputFileError
from src.logger import Logger
from src.utils import ensure_dir, create_progress_bar, remove_duplicates_preserve_order, write_df_to_csv
from src.seg_ir import parse_ir, read_ir_file, validate, write_ir_file
from src.seg_front import FrontendOptions, translate_unit, read_source_map, write_source_map
from src.seg_graph import build_sdg, dump_sdg, to_dot, render_svg, primary_control_vertices
from src.seg_engine import (
    SegmentationConfig,
    ContractionTrace,
    analyze_block,
    format_block_report,
    block_metrics_frame,
    segment,
    suggestions_frame,
    write_suggestions,
    read_suggestions,
)
from src.seg_engine.config import (
    DEFAULT_LOCS_THRESHOLD,
    DEFAULT_PA_THRESHOLD,
    DEFAULT_TOLERANCE,
    DEFAULT_SWEEP_TOLERANCES,
    MATCH_STRATEGIES,
    IR_SUFFIX,
    MAP_SUFFIX,
    DOT_SUFFIX,
    SVG_SUFFIX,
    SUGGESTIONS_FILE_NAME,
    METRICS_FILE_NAME,
    SWEEP_FILE_NAME,
    SWEEP_PLOT_FILE_NAME,
    TRACE_DIR_NAME,
)
from src.seg_eval import read_ground_truth, match_opportunities, tolerance_sweep, sweep_frame, plot_tolerance_sweep


EXIT_OK = 0
EXIT_INTERNAL_ERROR = 1
EXIT_INPUT_ERROR = 2


def exit_code_for(error):
    return EXIT_INPUT_ERROR if isinstance(error, ValueError) else EXIT_INTERNAL_ERROR


def require_readable(path):
    if not os.path.isfile(path) or not os.access(path, os.R_OK):
        raise InputFileError(f"cannot read input file {path}")
    return path


def report_failure(path, error):
    code = exit_code_for(error)
    print(f"❌ {path}: {error}", file=sys.stderr)
    if code == EXIT_INTERNAL_ERROR:
        Logger().error(f"{path}: unexpected failure\n{tb.format_exc()}")
    return code


def method_name(path):
    return Path(path).stem


def segmentation_config(args):
    return SegmentationConfig(
        locs_threshold=args.locs,
        pa_threshold=args.pa,
        no_relay_extract=args.no_relay_extract,
        tolerance=args.tolerance,
    )


def sidecar_source_map(ir_path):
    map_path = os.path.splitext(ir_path)[0] + MAP_SUFFIX
    if os.path.exists(map_path):
        return read_source_map(map_path)
    return None


# --- per-file commands ---

def cmd_translate(path, args):
    """Write <function>.ir and <function>.map for every function in a toy source."""
    with open(path, "r", encoding="utf-8") as f:
        source = f.read()
    opts = FrontendOptions(reduced_loop=args.reduced_loop, split_io=not args.no_split_io)
    written = []
    for name, (program, source_map) in translate_unit(source, opts).items():
        stem = name if name is not None else method_name(path)
        ir_path = os.path.join(args.out, stem + IR_SUFFIX)
        map_path = os.path.join(args.out, stem + MAP_SUFFIX)
        write_ir_file(program, ir_path)
        write_source_map(source_map, map_path)
        written.append(ir_path)
        print(f"✅ {path} -> {ir_path} ({len(program)} statements)")
    return written


def cmd_validate(path, args):
    with open(path, "r", encoding="utf-8") as f:
        program = parse_ir(f.read(), check=False)
    diagnostics = validate(program)
    if diagnostics:
        for diagnostic in diagnostics:
            print(f"❌ {path}: {diagnostic}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    print(f"✅ {path}: {len(program)} statements, valid")
    return EXIT_OK


def cmd_sdg(path, args):
    """Write the DOT drawing of the SDG (and an SVG when asked)."""
    g = build_sdg(read_ir_file(path))
    if args.dump:
        print(dump_sdg(g), end="")
    dot_path = os.path.join(args.out, method_name(path) + DOT_SUFFIX)
    dot_source = to_dot(g, name=method_name(path))
    with open(dot_path, "w", encoding="utf-8") as f:
        f.write(dot_source)
    if args.svg:
        render_svg(dot_source, os.path.join(args.out, method_name(path) + SVG_SUFFIX))
    print(f"✅ {path} -> {dot_path} ({len(g)} vertices)")
    return dot_path


def cmd_metrics(path, args):
    g = build_sdg(read_ir_file(path))
    if args.verbose:
        for v in primary_control_vertices(g):
            print(f"--- {method_name(path)} block {v}")
            print(format_block_report(analyze_block(g, v), args.no_relay_extract))
    df = block_metrics_frame(g, no_relay_extract=args.no_relay_extract)
    df.insert(0, 'method', method_name(path))
    return df


def cmd_segment(path, args, config):
    program = read_ir_file(path)
    method = method_name(path)
    trace = ContractionTrace() if args.trace else None
    segment_graph, emos = segment(program, config, method=method, trace=trace)

    if trace is not None:
        trace_dir = os.path.join(args.out, TRACE_DIR_NAME, method)
        ensure_dir(trace_dir, replace=True)
        snapshots = trace.write(trace_dir, svg=args.svg)
        print(f"  ✅ {len(snapshots)} snapshots saved to {trace_dir}")
    if args.dot:
        dot_source = to_dot(segment_graph.graph, name=method, sealed=segment_graph.sealed)
        dot_path = os.path.join(args.out, f"{method}-segments{DOT_SUFFIX}")
        with open(dot_path, "w", encoding="utf-8") as f:
            f.write(dot_source)
        if args.svg:
            render_svg(dot_source, os.path.join(args.out, f"{method}-segments{SVG_SUFFIX}"))

    for emo in emos:
        print(f"  {method}: {emo}")
    if not emos:
        print(f"  ⚠️  {method}: no extract method opportunity")
    return suggestions_frame(emos, method=method, source_map=sidecar_source_map(path))


def cmd_eval(args):
    suggested = read_suggestions(args.suggestions)
    marks = read_ground_truth(args.ground_truth)
    report = match_opportunities(suggested, marks, args.tolerance, args.strategy)
    print(report.to_text(), end="")
    if args.sweep:
        reports = tolerance_sweep(suggested, marks, DEFAULT_SWEEP_TOLERANCES, args.strategy)
        df = sweep_frame(reports)
        write_df_to_csv(df, os.path.join(args.out, SWEEP_FILE_NAME))
        png_path = plot_tolerance_sweep(df, os.path.join(args.out, SWEEP_PLOT_FILE_NAME))
        print(f"✅ Tolerance sweep saved to {os.path.join(args.out, SWEEP_FILE_NAME)}")
        if png_path:
            print(f"✅ Plot saved to {png_path}")
    return EXIT_OK


# --- fan-out ---

def run_each(paths, description, handler):
    """
    Call handler(path) for every input; a failing input does not stop the others.

    Returns:
        (worst exit code, list of handler results of the inputs that succeeded)
    """
    worst = EXIT_OK
    results = []

    def run_one(path):
        nonlocal worst
        try:
            outcome = handler(require_readable(path))
        except Exception as e:
            worst = max(worst, report_failure(path, e))
            return
        if isinstance(outcome, int) and not isinstance(outcome, bool):
            worst = max(worst, outcome)
        else:
            results.append(outcome)

    if len(paths) == 1:
        run_one(paths[0])
        return worst, results

    with create_progress_bar() as progress:
        task_id = progress.add_task(f"[green]{description}", total=len(paths))
        for path in paths:
            run_one(path)
            progress.advance(task_id)
    return worst, results


def finish(worst, succeeded, total, noun):
    if succeeded > 0 and worst == EXIT_OK:
        print(f"\n🎉 {succeeded} {noun}{'' if succeeded == 1 else 's'} processed successfully!")
    elif succeeded > 0:
        print(f"\n⚠️  {succeeded} of {total} {noun}s processed")
    return worst


# --- argument parsing ---

def add_threshold_arguments(parser):
    parser.add_argument(
        '--locs',
        type=float,
        default=DEFAULT_LOCS_THRESHOLD,
        help=f'LoCS threshold; blocks strictly below it are extracted (default: {DEFAULT_LOCS_THRESHOLD})'
    )
    parser.add_argument(
        '--pa',
        type=float,
        default=DEFAULT_PA_THRESHOLD,
        help=f'Parent affinity threshold; parents strictly below it are merged (default: {DEFAULT_PA_THRESHOLD})'
    )
    parser.add_argument(
        '--no-relay-extract',
        action='store_true',
        help='Also extract blocks that export no data (LoCS numerator counted as 1)'
    )
    parser.add_argument(
        '--tolerance',
        type=int,
        default=DEFAULT_TOLERANCE,
        help=f'Allowed boundary deviation in IR statements when matching (default: {DEFAULT_TOLERANCE})'
    )


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--out',
        default=os.getcwd(),
        help='Output directory (default: current directory)'
    )
    common.add_argument(
        '--debug',
        action='store_true',
        help='Enable debug logging'
    )
    common.add_argument(
        '--log-file',
        default=None,
        help='Also write the log to this file'
    )

    parser = argparse.ArgumentParser(
        prog='seg_tool',
        description='Find extract method refactoring opportunities by successive edge contraction'
    )
    parser.add_argument(
        '-v', '--version',
        action='version',
        version=f'%(prog)s {__version__}'
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    p = subparsers.add_parser('translate', parents=[common], help='Translate toy-language sources to segment IR')
    p.add_argument('inputs', nargs='+', help='Toy-language source files')
    p.add_argument('--reduced-loop', action='store_true', help='Keep the loop step out of the loop block')
    p.add_argument('--no-split-io', action='store_true', help='One Input/Output statement per call, not per variable')

    p = subparsers.add_parser('validate', parents=[common], help='Check IR files for structural errors')
    p.add_argument('inputs', nargs='+', help='IR files')

    p = subparsers.add_parser('sdg', parents=[common], help='Build the SDG of IR files and write DOT')
    p.add_argument('inputs', nargs='+', help='IR files')
    p.add_argument('--dump', action='store_true', help='Print the vertex and edge listing')
    p.add_argument('--svg', action='store_true', help='Also render SVG (needs the graphviz binary)')

    p = subparsers.add_parser('metrics', parents=[common], help='Report LoCS and block census per control block')
    p.add_argument('inputs', nargs='+', help='IR files')
    p.add_argument('--no-relay-extract', action='store_true', help='Count the LoCS numerator as 1 for relay-free blocks')
    p.add_argument('--verbose', action='store_true', help='Print the census table of every block')

    for name, help_text in (('segment', 'Segment IR files into extract method opportunities'),
                            ('trace', 'Segment IR files and save a DOT snapshot per contraction step')):
        p = subparsers.add_parser(name, parents=[common], help=help_text)
        p.add_argument('inputs', nargs='+', help='IR files')
        add_threshold_arguments(p)
        p.add_argument('--dot', action='store_true', help='Write the final contracted graph as DOT')
        p.add_argument('--svg', action='store_true', help='Also render SVG (needs the graphviz binary)')
        if name == 'segment':
            p.add_argument('--trace', action='store_true', help='Save a DOT snapshot per contraction step')

    p = subparsers.add_parser('eval', parents=[common], help='Score a suggestions file against ground truth')
    p.add_argument('suggestions', help=f'Suggestions CSV written by segment ({SUGGESTIONS_FILE_NAME})')
    p.add_argument('ground_truth', help="Ground truth file, one 'method start end' per line")
    p.add_argument(
        '--tolerance',
        type=int,
        default=DEFAULT_TOLERANCE,
        help=f'Allowed boundary deviation in IR statements (default: {DEFAULT_TOLERANCE})'
    )
    p.add_argument(
        '--strategy',
        choices=MATCH_STRATEGIES,
        default=MATCH_STRATEGIES[0],
        help='Matching strategy (default: greedy)'
    )
    p.add_argument('--sweep', action='store_true', help='Also write the tolerance sweep table and plot')
    return parser


def configure_logging(args):
    logger = Logger()
    logger.set_level(logging.DEBUG if args.debug else logging.INFO)
    if args.log_file:
        logger.add_file_handler(args.log_file)


def run(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args)
    ensure_dir(args.out)

    if args.command == 'eval':
        try:
            require_readable(args.suggestions)
            require_readable(args.ground_truth)
            return cmd_eval(args)
        except Exception as e:
            return report_failure(args.suggestions, e)

    paths = remove_duplicates_preserve_order(args.inputs)

    if args.command == 'translate':
        worst, results = run_each(paths, "Translating", lambda p: cmd_translate(p, args))
        return finish(worst, len(results), len(paths), "source")

    if args.command == 'validate':
        worst, _ = run_each(paths, "Validating", lambda p: cmd_validate(p, args))
        return worst

    if args.command == 'sdg':
        worst, results = run_each(paths, "Building SDGs", lambda p: cmd_sdg(p, args))
        return finish(worst, len(results), len(paths), "method")

    if args.command == 'metrics':
        worst, frames = run_each(paths, "Measuring blocks", lambda p: cmd_metrics(p, args))
        if frames:
            metrics_path = os.path.join(args.out, METRICS_FILE_NAME)
            write_df_to_csv(pd.concat(frames, ignore_index=True), metrics_path)
            print(f"✅ Block metrics saved to {metrics_path}")
        return finish(worst, len(frames), len(paths), "method")

    # segment and trace
    if args.command == 'trace':
        args.trace = True
    try:
        config = segmentation_config(args)
    except ValueError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    worst, frames = run_each(paths, "Segmenting", lambda p: cmd_segment(p, args, config))
    if frames:
        suggestions_path = os.path.join(args.out, SUGGESTIONS_FILE_NAME)
        write_suggestions(pd.concat(frames, ignore_index=True), suggestions_path)
        print(f"✅ Suggestions saved to {suggestions_path}")
    return finish(worst, len(frames), len(paths), "method")


def main(argv=None):
    sys.exit(run(argv))


if __name__ == '__main__':
    main()
