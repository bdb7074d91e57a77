#!/usr/bin/env python3
"""
Degree Square Extremes - Main Script

Exact values of f(n,m), the largest sum of squared degrees over graphs with n
vertices and m edges, together with the extremal constructions, the classical
upper bounds and a verifier that certifies every bound inequality on grids.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Make the src package importable when run from another directory
sys.path.insert(0, str(Path(__file__).parent))

from src.cli_report import (  # noqa: E402
    CHECK_ALIASES,
    CHECK_ORDER,
    EXIT_IO,
    EXIT_USAGE,
    SweepConfig,
    cmd_bounds,
    cmd_construct,
    cmd_exact,
    cmd_oracle,
    cmd_verify,
    load_config,
    parse_checks,
)
from src.constructions import BUILDERS  # noqa: E402
from src.errors import ExtremalError  # noqa: E402

DEFAULT_CONFIG_PATH = Path(__file__).parent / "config" / "config.yml"

logger = logging.getLogger(__name__)


def setup_logging(level: str = "INFO", log_file: Optional[str] = None) -> None:
    """Setup logging configuration."""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


class UsageError(Exception):
    """Raised by the parser instead of exiting."""


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser whose usage errors surface as exit code 1."""

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _m_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="degree-square-extremes",
                            description="Maximum sum of squared degrees: values, bounds and verification")
    parser.add_argument("--config", default=str(DEFAULT_CONFIG_PATH), help="YAML config file")
    parser.add_argument("--log-level", default=None, help="Override logging.level")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = sub.add_parser("exact", help="Decompositions, C, S and f for (n, m)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)

    p = sub.add_parser("bounds", help="De Caen, sharp and radical bounds for (n, m)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--json", action="store_true", help="Emit the report as JSON")

    p = sub.add_parser("construct", help="Build an extremal graph and write its edge list")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--kind", choices=sorted(BUILDERS), required=True)
    p.add_argument("--out", default=None, help="Edge-list path (stdout when omitted)")

    p = sub.add_parser("oracle", help="Compare exhaustive enumeration against f")
    p.add_argument("n", type=int)
    p.add_argument("--m", type=int, default=None, help="Single edge count (all m when omitted)")
    p.add_argument("--allow-large", action="store_true", help="Permit n above the configured cap")

    p = sub.add_parser("verify", help="Run exact checks over a grid of (n, m)")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=100)
    m_policy = p.add_mutually_exclusive_group()
    m_policy.add_argument("--m", type=_m_list, default=None, help="Explicit edge counts, comma-separated")
    m_policy.add_argument("--stride", type=int, default=None, help="Visit every k-th edge count")
    p.add_argument("--checks", default="all",
                   help=f"Comma-separated subset of {', '.join(CHECK_ORDER)}, their short names "
                        f"({', '.join(CHECK_ALIASES)}), or 'all'")
    p.add_argument("--out", default=None, help="Output path (results/sweep.<format> when omitted)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=None, help="Worker processes")
    p.add_argument("--ratio", action="store_true", help="Add the 100*D/f display column")
    p.add_argument("--root-gap-r-max", type=int, default=None,
                   help="Also certify the root-gap inequality for 3 <= r <= R")
    p.add_argument("--oracle-cap", type=int, default=None, help="Largest n checked against the oracle")
    return parser


def _sweep_config(args: argparse.Namespace, config: dict, progress: bool) -> SweepConfig:
    if args.m is not None:
        policy = {'m_policy': 'list', 'm_values': tuple(args.m)}
    elif args.stride is not None:
        policy = {'m_policy': 'stride', 'stride': args.stride}
    else:
        policy = {'m_policy': 'all'}
    return SweepConfig.from_config(
        config,
        n_min=args.n_min,
        n_max=args.n_max,
        checks=parse_checks(args.checks),
        out_path=Path(args.out) if args.out else None,
        fmt=args.format,
        jobs=args.jobs,
        oracle_cap=args.oracle_cap,
        include_ratio=args.ratio or None,
        progress=progress,
        **policy,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        config = load_config(args.config)
    except ExtremalError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as e:
        print(f"error: cannot read config {args.config}: {e}", file=sys.stderr)
        return EXIT_IO

    setup_logging(args.log_level or config['logging']['level'], config['logging']['file'])
    progress = bool(config['logging']['progress']) and sys.stderr.isatty()

    try:
        if args.command == "exact":
            return cmd_exact(args.n, args.m)
        if args.command == "bounds":
            return cmd_bounds(args.n, args.m, as_json=args.json, digits=config['display']['digits'])
        if args.command == "construct":
            return cmd_construct(args.n, args.m, args.kind, args.out)
        if args.command == "oracle":
            return cmd_oracle(args.n, args.m, config, allow_large=args.allow_large, progress=progress)
        return cmd_verify(_sweep_config(args, config, progress), config, root_gap_r_max=args.root_gap_r_max)
    except ExtremalError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"{args.command} failed with I/O error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
