"""
Command-line entry point

    harbourne analyze catalog:klein --format csv
    harbourne catalog
    harbourne sweep-cn --from 9 --to 99 --step 3
    harbourne cover catalog:hirzebruch-gauss --n-min 2 --n-max 10
    harbourne check path/to/arrangement.json

Reports go to stdout, logs and errors to stderr. Exit codes: 0 success,
1 validation or check failure, 2 parse or usage error.
"""

import argparse
import sys
from typing import List, Optional

from harbourne import __version__, report
from harbourne.config import Config
from harbourne.exceptions import HarbourneError
from harbourne.logging_config import HarbourneLogger

logger = HarbourneLogger.get_logger(__name__)


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # Sub-command copies use SUPPRESS so they only override when given
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument(
        "--format",
        choices=Config.FORMATS,
        default=default("human"),
        help="Output format (default: human)",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=Config.LOG_LEVELS,
        default=default(Config.LOG_LEVEL),
        help="Log level (DEBUG, INFO, WARNING, ERROR)",
    )
    parser.add_argument("--log-file", default=default(Config.LOG_FILE), help="Optional log file path")
    parser.add_argument(
        "--jobs",
        type=int,
        default=default(Config.JOBS),
        help="Worker threads for sweep-cn and cover rows",
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with every sub-command"""
    parser = argparse.ArgumentParser(
        prog="harbourne",
        description="Harbourne indices, cover invariants and negativity bounds of curve arrangements",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_global_flags(parser, suppress=False)

    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, suppress=True)

    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser(
        "analyze", parents=[common], help="H values, Euler numbers and bounds of one arrangement"
    )
    analyze.add_argument("target", help="Arrangement document path or catalog:NAME")

    commands.add_parser("catalog", parents=[common], help="List catalog entries")

    sweep = commands.add_parser("sweep-cn", parents=[common], help="Tabulate H(C_n, Sing C_n)")
    sweep.add_argument("--from", dest="start", type=int, required=True, help="First n")
    sweep.add_argument("--to", dest="stop", type=int, required=True, help="Last n")
    sweep.add_argument("--step", type=int, default=3, help="Step between values of n (default: 3)")

    cover = commands.add_parser("cover", parents=[common], help="Chern invariants of the covers X_n")
    cover.add_argument("target", help="Arrangement document path or catalog:NAME")
    cover.add_argument("--n-min", type=int, default=2, help="Smallest branching order (default: 2)")
    cover.add_argument("--n-max", type=int, default=10, help="Largest branching order (default: 10)")

    check = commands.add_parser("check", parents=[common], help="Run every applicable check")
    check.add_argument("target", help="Arrangement document path or catalog:NAME")

    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "analyze":
        arr, _ = report.load_target(args.target)
        sys.stdout.write(report.analyze(arr).render(args.format))
        return 0
    if args.command == "catalog":
        sys.stdout.write(report.catalog_listing().render(args.format))
        return 0
    if args.command == "sweep-cn":
        table = report.sweep_cn(args.start, args.stop, args.step, jobs=args.jobs)
        sys.stdout.write(table.render(args.format))
        return 0
    if args.command == "cover":
        arr, _ = report.load_target(args.target)
        table = report.cover_table(arr, args.n_min, args.n_max, jobs=args.jobs)
        sys.stdout.write(table.render(args.format))
        return 0
    if args.command == "check":
        arr, expected = report.load_target(args.target)
        outcome = report.check(arr, expected)
        sys.stdout.write(outcome.render(args.format))
        return outcome.exit_code
    raise AssertionError(f"unhandled command {args.command}")


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, execute one command and return its exit code

    argparse usage errors exit with code 2 on their own.
    """
    args = build_parser().parse_args(argv)
    HarbourneLogger.setup_logging(level=args.log_level, log_file=args.log_file)
    logger.debug(f"Running {args.command} with {vars(args)}")

    try:
        return _dispatch(args)
    except HarbourneError as e:
        logger.debug(f"{type(e).__name__}: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code


def main():
    """Main entry point for the harbourne command"""
    sys.exit(run())


if __name__ == "__main__":
    main()
