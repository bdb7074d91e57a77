"""
Command-line front end.

This module contains:
- Configuration loading and SweepConfig
- The sweep verifier and its CSV/JSON writers
- The text verification report
- One function per subcommand
"""

from .commands import (
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VIOLATION,
    cmd_bounds,
    cmd_construct,
    cmd_exact,
    cmd_oracle,
    cmd_verify,
)
from .config import ALL_CHECKS, CHECK_ALIASES, CHECK_ORDER, DEFAULT_CONFIG, SweepConfig, load_config, parse_checks
from .report import generate_verification_report
from .verifier import SweepSummary, SweepVerifier, ViolationRecord, csv_header, evaluate_vertex_count

__all__ = [
    'ALL_CHECKS',
    'CHECK_ALIASES',
    'CHECK_ORDER',
    'DEFAULT_CONFIG',
    'EXIT_IO',
    'EXIT_OK',
    'EXIT_USAGE',
    'EXIT_VIOLATION',
    'SweepConfig',
    'SweepSummary',
    'SweepVerifier',
    'ViolationRecord',
    'cmd_bounds',
    'cmd_construct',
    'cmd_exact',
    'cmd_oracle',
    'cmd_verify',
    'csv_header',
    'evaluate_vertex_count',
    'generate_verification_report',
    'load_config',
    'parse_checks',
]
