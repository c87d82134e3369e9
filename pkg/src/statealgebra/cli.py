"""Command-line front end: run a scenario, emit CSV, optionally render a figure.

Exit codes: 0 success, 2 usage or configuration error, 3 output I/O error.
"""

import argparse
import math
import sys

from .scenarios import SCENARIOS, ScenarioConfig, emit_csv, run_scenario


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="statealgebra",
        description="Run a desk-scale state-space scenario and emit a deterministic CSV report.",
    )
    parser.add_argument("--scenario", required=True, choices=SCENARIOS, help="scenario to run")
    parser.add_argument("--out", default=None, help="output CSV path (default: stdout)")
    parser.add_argument("--plot", default=None, metavar="PATH",
                        help="also render the report to this figure file (png/pdf/svg)")
    parser.add_argument("--n", type=int, default=512, help="quantum grid cells (default 512)")
    parser.add_argument("--nx", type=int, default=None, help="classical position cells (default: n)")
    parser.add_argument("--np", type=int, default=None, help="classical momentum cells (default: n)")
    parser.add_argument("--xmin", type=float, default=-10.0, help="position lower bound (default -10)")
    parser.add_argument("--xmax", type=float, default=10.0, help="position upper bound (default 10)")
    parser.add_argument("--pmin", type=float, default=-10.0, help="classical momentum lower bound (default -10)")
    parser.add_argument("--pmax", type=float, default=10.0, help="classical momentum upper bound (default 10)")
    parser.add_argument("--sigma", type=float, default=1.0, help="packet width (default 1)")
    parser.add_argument("--d", type=float, default=4.0, help="packet separation (default 4)")
    parser.add_argument("--p0", type=float, default=0.0, help="packet mean momentum (default 0)")
    parser.add_argument("--b", type=float, default=0.0, help="relative phase of the second packet (default 0)")
    parser.add_argument("--step", type=float, default=math.pi / 32, help="sweep step (default pi/32)")
    parser.add_argument("--seed", type=int, default=0, help="seed for the group-demo states (default 0)")
    return parser


def parse_args(argv: "list[str] | None" = None) -> ScenarioConfig:
    """Turn argv into a ScenarioConfig; bad flags exit with code 2."""
    args = build_parser().parse_args(argv)
    return ScenarioConfig(**vars(args))


def main(argv: "list[str] | None" = None) -> int:
    config = parse_args(argv)
    try:
        report = run_scenario(config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        if config.out is None:
            emit_csv(report, sys.stdout)
        else:
            with open(config.out, "w", encoding="utf-8", newline="\n") as fh:
                emit_csv(report, fh)
        if config.plot is not None:
            from .plotting import save_figure

            save_figure(report, config.plot)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
