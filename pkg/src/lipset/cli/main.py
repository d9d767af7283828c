"""
lipset CLI.

All commands support:
- --format csv|json|table
- -o/--out to write the result to a file
- Deterministic exit codes (0 success, 1 verification failure, 2 input error)
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional

from ..construction import DEFAULT_RULE
from ..core.logging_config import configure_logging
from ..density import DEFAULT_RATIO, DEFAULT_THRESHOLD
from ..errors import LipsetError
from ..estimation import DEFAULT_REFINEMENT
from ..verification import SUITE_NAMES
from .build_commands import build_chain
from .cantor_commands import DEFAULT_SCHEDULE_REF, cantor_full, cantor_level, cantor_stage, cantor_windows
from .config import RunConfig, rational_arg
from .lipscan_commands import lipscan
from .profile_commands import profile_set
from .set_commands import (
    set_complement,
    set_contiguous,
    set_distance,
    set_intersect,
    set_measure,
    set_union,
)
from .verify_commands import verify

EXIT_INPUT_ERROR = 2
EXIT_INTERRUPTED = 130


def _add_window(parser: argparse.ArgumentParser, help_text: str) -> None:
    parser.add_argument(
        "--window",
        nargs=2,
        type=rational_arg,
        metavar=("LO", "HI"),
        help=help_text,
    )


def _add_factor(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--factor",
        type=rational_arg,
        default=DEFAULT_RULE.factor,
        help=f"Breakpoint step factor (default: {DEFAULT_RULE.factor}); "
        "steps are rounded down to a power of two unless --exact-steps is given",
    )
    parser.add_argument(
        "--exact-steps",
        action="store_true",
        help="Use the unrounded step factor·min{2^-n g², 2^-n, g}",
    )


def create_parser() -> argparse.ArgumentParser:
    """Create argument parser with all commands."""
    parser = argparse.ArgumentParser(
        prog="lipset",
        description="lipset - exact interval sets, one-sided densities and lip/Lip constructions",
        epilog="See 'lipset <command> --help' for command-specific help. "
        "Set and chain arguments accept a JSON file or bundled:NAME.",
    )

    # Global options
    parser.add_argument("-o", "--out", help="Write output to this file instead of stdout")
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="Seed for randomized sampling (default: LIPSET_DEFAULT_SEED or 42)",
    )
    parser.add_argument(
        "--format",
        choices=["csv", "json", "table"],
        default=None,
        help="Output format (default: csv for tables, json for sets and reports, "
        "a bare value for measure and distance)",
    )
    parser.add_argument(
        "--decimals", action="store_true", help="Add decimal columns to csv output"
    )
    parser.add_argument(
        "--digits",
        type=int,
        default=None,
        help="Significant digits of decimal columns (default: LIPSET_DECIMAL_DIGITS or 12)",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Verbose logging")
    parser.add_argument("--quiet", "-q", action="store_true", help="Quiet mode (errors only)")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # ========================================================================
    # SET COMMANDS
    # ========================================================================
    set_parser = subparsers.add_parser("set", help="Interval-set algebra")
    set_subparsers = set_parser.add_subparsers(dest="subcommand")

    for name, text in (("union", "Union of two sets"), ("intersect", "Intersection of two sets")):
        p = set_subparsers.add_parser(name, help=text)
        p.add_argument("a", help="First set")
        p.add_argument("b", help="Second set")
        p.set_defaults(default_format="json")

    p = set_subparsers.add_parser("complement", help="Complement in the line or a window")
    p.add_argument("a", help="Set")
    _add_window(p, "Closed window to complement within")
    p.set_defaults(default_format="json")

    p = set_subparsers.add_parser("measure", help="Lebesgue measure")
    p.add_argument("a", help="Set")
    _add_window(p, "Measure inside this closed window only")
    p.set_defaults(default_format="text")

    p = set_subparsers.add_parser("distance", help="Distance from points to the set")
    p.add_argument("a", help="Set")
    p.add_argument("--point", nargs="+", type=rational_arg, required=True, help="Points")
    p.set_defaults(default_format="text")

    p = set_subparsers.add_parser("contiguous", help="Contiguous intervals of the complement")
    p.add_argument("a", help="Set")
    p.set_defaults(default_format="json")

    # ========================================================================
    # BUILD COMMAND
    # ========================================================================
    build_parser = subparsers.add_parser("build", help="Validate a nested chain and evaluate f")
    build_parser.add_argument("chain", help="Chain file")
    build_parser.add_argument("--eval", nargs="+", type=rational_arg, help="Points to evaluate")
    build_parser.add_argument(
        "--grid",
        nargs=3,
        type=rational_arg,
        metavar=("LO", "HI", "N"),
        help="Evaluate on N+1 equally spaced points",
    )
    build_parser.add_argument(
        "--nest", action="store_true", help="Replace stage n by the union of stages 1..n"
    )
    build_parser.add_argument(
        "--diagnose", action="store_true", help="Log SOSD diagnostics of the final stage"
    )
    build_parser.add_argument(
        "--tolerance",
        type=rational_arg,
        default=Fraction(0),
        help="Evaluation tolerance for the series tail (default: 0, exact)",
    )
    _add_factor(build_parser)
    build_parser.set_defaults(default_format="csv")

    # ========================================================================
    # PROFILE COMMAND
    # ========================================================================
    profile_parser = subparsers.add_parser("profile", help="One-sided density profiles and SOSD scans")
    profile_parser.add_argument("set", help="Closed set file")
    profile_parser.add_argument("--point", nargs="+", type=rational_arg, required=True, help="Points")
    profile_parser.add_argument("--radii", nargs="+", type=rational_arg, help="Radii for a profile")
    profile_parser.add_argument("--scan", action="store_true", help="Exact SOSD scan over [rmin, rmax]")
    profile_parser.add_argument("--rmin", type=rational_arg, help="Smallest radius")
    profile_parser.add_argument("--rmax", type=rational_arg, help="Largest radius")
    profile_parser.add_argument(
        "--threshold",
        type=rational_arg,
        default=DEFAULT_THRESHOLD,
        help=f"SOSD pass threshold (default: {DEFAULT_THRESHOLD})",
    )
    profile_parser.add_argument(
        "--ratio",
        type=rational_arg,
        default=DEFAULT_RATIO,
        help=f"Geometric ratio of scanned radii (default: {DEFAULT_RATIO})",
    )
    profile_parser.set_defaults(default_format="csv")

    # ========================================================================
    # LIPSCAN COMMAND
    # ========================================================================
    lip_parser = subparsers.add_parser("lipscan", help="Estimate lip f(x) and Lip f(x)")
    lip_parser.add_argument("chain", help="Chain file")
    lip_parser.add_argument("--point", nargs="+", type=rational_arg, required=True, help="Points")
    lip_parser.add_argument("--rmin", type=rational_arg, default=Fraction(1, 1024), help="Smallest radius")
    lip_parser.add_argument("--rmax", type=rational_arg, default=Fraction(1, 16), help="Largest radius")
    lip_parser.add_argument(
        "--ratio", type=rational_arg, default=Fraction(1, 2), help="Radius ratio (default: 1/2)"
    )
    lip_parser.add_argument(
        "--refinement",
        type=int,
        default=DEFAULT_REFINEMENT,
        help=f"Grid steps per radius (default: {DEFAULT_REFINEMENT})",
    )
    lip_parser.add_argument("--parallel", action="store_true", help="Scan points on a thread pool")
    lip_parser.add_argument(
        "--nest", action="store_true", help="Replace stage n by the union of stages 1..n"
    )
    _add_factor(lip_parser)
    lip_parser.set_defaults(default_format="csv")

    # ========================================================================
    # CANTOR COMMANDS
    # ========================================================================
    cantor_parser = subparsers.add_parser("cantor", help="Positive-measure Cantor-type sets")
    cantor_subparsers = cantor_parser.add_subparsers(dest="subcommand")

    p = cantor_subparsers.add_parser("level", help="Level-k open set of (a, b)")
    p.add_argument("--a", type=rational_arg, default=Fraction(0), help="Left end (default: 0)")
    p.add_argument("--b", type=rational_arg, default=Fraction(1), help="Right end (default: 1)")
    p.add_argument("--k", type=int, default=1, help="Level (default: 1)")
    p.set_defaults(default_format="json")

    for name, text in (("stage", "Build an F_inf stage and print its ledger"),
                       ("windows", "Density-window check of an F_inf stage")):
        p = cantor_subparsers.add_parser(name, help=text)
        p.add_argument(
            "--schedule",
            default=DEFAULT_SCHEDULE_REF,
            help="Schedule file, bundled:NAME or 'default' (l_n = 4(n+2), budget 1/2)",
        )
        p.add_argument("--depth", type=int, default=1, help="Generations (default: 1)")
        group = p.add_mutually_exclusive_group()
        group.add_argument(
            "--materialize",
            action="store_true",
            help="Build geometry even above LIPSET_MATERIALIZE_LIMIT",
        )
        if name == "stage":
            group.add_argument("--ledger-only", action="store_true", help="Skip geometry")
            p.set_defaults(default_format="json")
        else:
            p.add_argument(
                "--mode",
                choices=["sample", "critical"],
                default="sample",
                help="Sample points only, or also critical points (default: sample)",
            )
            p.set_defaults(default_format="csv", ledger_only=False)

    p = cantor_subparsers.add_parser("full", help="Full-measure tiling of a window")
    p.add_argument("--epsilon", type=rational_arg, default=Fraction(1, 4), help="Uncovered budget")
    p.add_argument("--copies", type=int, default=4, help="Number of tiles (default: 4)")
    p.add_argument("--depth", type=int, default=1, help="Generations per tile (default: 1)")
    _add_window(p, "Closed window to tile (default: 0 1)")
    p.add_argument("--points", type=int, help="Scan this many seeded points of the union")
    p.add_argument("--rmin", type=rational_arg, help="Smallest scan radius")
    p.add_argument("--rmax", type=rational_arg, help="Largest scan radius")
    p.add_argument(
        "--threshold",
        type=rational_arg,
        default=Fraction(1, 2),
        help="SOSD pass threshold (default: 1/2)",
    )
    p.set_defaults(default_format="json")

    # ========================================================================
    # VERIFY COMMAND
    # ========================================================================
    verify_parser = subparsers.add_parser("verify", help="Run the invariant suite")
    verify_parser.add_argument(
        "--suite",
        choices=["all", *SUITE_NAMES],
        default="all",
        help="Suite to run (default: all)",
    )
    verify_parser.add_argument("--depth", type=int, default=3, help="Construction depth (default: 3)")
    verify_parser.add_argument(
        "--samples", type=int, default=1000, help="Random samples per check (default: 1000)"
    )
    _add_factor(verify_parser)
    verify_parser.set_defaults(default_format="json")

    return parser


def dispatch(args: argparse.Namespace, config: RunConfig) -> Optional[int]:
    if args.command == "set":
        handlers = {
            "union": set_union,
            "intersect": set_intersect,
            "complement": set_complement,
            "measure": set_measure,
            "distance": set_distance,
            "contiguous": set_contiguous,
        }
        handler = handlers.get(args.subcommand)
        return handler(args, config) if handler else None

    if args.command == "cantor":
        handlers = {
            "level": cantor_level,
            "stage": cantor_stage,
            "windows": cantor_windows,
            "full": cantor_full,
        }
        handler = handlers.get(args.subcommand)
        return handler(args, config) if handler else None

    if args.command == "build":
        return build_chain(args, config)
    if args.command == "profile":
        return profile_set(args, config)
    if args.command == "lipscan":
        return lipscan(args, config)
    if args.command == "verify":
        return verify(args, config)
    return None


def run(argv: Optional[List[str]] = None) -> int:
    """Parse, configure logging, dispatch; returns the exit code."""
    parser = create_parser()
    args = parser.parse_args(argv)

    if args.verbose:
        configure_logging("DEBUG")
    elif args.quiet:
        configure_logging("ERROR")
    else:
        configure_logging()

    try:
        config = RunConfig.from_args(args)
        code = dispatch(args, config)
        if code is None:
            parser.print_help()
            return EXIT_INPUT_ERROR
        return code
    except KeyboardInterrupt:
        print("\nInterrupted", file=sys.stderr)
        return EXIT_INTERRUPTED
    except LipsetError as e:
        if args.verbose:
            raise
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main(argv: Optional[List[str]] = None) -> None:
    """Main CLI entry point."""
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
