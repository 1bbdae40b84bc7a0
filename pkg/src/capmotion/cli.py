"""Command-line front end.

Subcommands:
    run <config>            execute a scenario and write reports/CSV
    validate <config>       parse and validate a scenario document
    dimension-demo --t T    emit the non-harmonicity certificate and sweep
    version

Exit codes: 0 all verdicts consistent, 2 verdict violations, 1 errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from . import __version__
from .errors import CapmotionError, DimensionDomain
from .scenario import dimension_demo, parse_scenario, run, validate_scenario
from .variation import LambdaGrid


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="capmotion",
        description="analytic capacity under holomorphic motions")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_overrides(p):
        p.add_argument("--radius", type=float, help="quadrature circle radius")
        p.add_argument("--quadrature-n", type=int, help="starting node count")
        p.add_argument("--quadrature-tol", type=float, help="doubling tolerance")
        p.add_argument("--grid-h", type=float, help="lambda grid spacing")
        p.add_argument("--grid-clip", type=float, help="lambda clip radius")
        p.add_argument("--seed", type=int, help="sampling seed")
        p.add_argument("--output", type=str, help="output directory")

    p_run = sub.add_parser("run", help="execute a scenario configuration")
    p_run.add_argument("config", type=Path)
    add_overrides(p_run)

    p_val = sub.add_parser("validate", help="validate a scenario configuration")
    p_val.add_argument("config", type=Path)

    p_dim = sub.add_parser("dimension-demo",
                           help="dimension phase-transition certificate")
    p_dim.add_argument("--t", type=float, required=True)
    p_dim.add_argument("--samples", type=int, default=5)
    p_dim.add_argument("--output", type=str, default="out")

    sub.add_parser("version", help="print the version")
    return parser


def _apply_overrides(scenario, args):
    changes = {}
    if args.radius is not None:
        changes["quadrature_radius"] = args.radius
    if args.quadrature_n is not None:
        changes["quadrature_nodes"] = args.quadrature_n
    if args.quadrature_tol is not None:
        changes["quadrature_tol"] = args.quadrature_tol
    if args.seed is not None:
        changes["seed"] = args.seed
    if args.output is not None:
        changes["output_dir"] = args.output
    if args.grid_h is not None or args.grid_clip is not None:
        grid = scenario.grid
        changes["grid"] = LambdaGrid(
            h=args.grid_h if args.grid_h is not None else grid.h,
            half_width=grid.half_width,
            center=grid.center,
            clip_radius=(args.grid_clip if args.grid_clip is not None
                         else grid.clip_radius))
    if not changes:
        return scenario
    scenario = dataclasses.replace(scenario, **changes)
    validate_scenario(scenario)
    return scenario


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "version":
            print(f"capmotion {__version__}")
            return 0
        if args.command == "validate":
            parse_scenario(args.config.read_text())
            print(f"{args.config}: valid")
            return 0
        if args.command == "dimension-demo":
            report = dimension_demo(args.t, args.samples, args.output)
            for name, entry in report.entries.items():
                print(f"{name}: {entry['verdict']} ({entry['summary']})")
            for f in report.files:
                print(f"wrote {f}")
            return report.exit_code
        if args.command == "run":
            scenario = _apply_overrides(parse_scenario(args.config.read_text()), args)
            report = run(scenario)
            print(f"scenario: {report.name}")
            for name, entry in report.entries.items():
                print(f"{name}: {entry['verdict']} ({entry['summary']})")
            for f in report.files:
                print(f"wrote {f}")
            return report.exit_code
    except CapmotionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 1


def console_main() -> None:
    sys.exit(main())
