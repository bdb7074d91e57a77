"""
Subcommand implementations.

Each command prints its result to stdout and returns a process exit code.
Errors propagate as ExtremalError or OSError; main.py maps them to codes.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..bound_suite import build_bound_report, display
from ..constructions import BUILDERS, format_edge_list, sum_sq_degrees, write_edge_list
from ..exact_core import co_decompose, f_exact, triangular_decompose, validate_counts, value_C, value_S
from ..oracle import BruteForceOracle
from .config import SweepConfig
from .report import generate_verification_report
from .verifier import SweepVerifier

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_IO = 3

# formula realized by each construction
_TARGETS = {
    'qc': ('C', value_C),
    'qs': ('S', value_S),
    'extremal': ('f', f_exact),
}


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_exact(n: int, m: int) -> int:
    """Print the decompositions, C, S, f and the winner for (n, m)."""
    validate_counts(n, m)
    tri = triangular_decompose(m)
    co = co_decompose(n, m)
    report = build_bound_report(n, m)
    print(f"n={n} m={m}")
    print(f"r={tri.r} q={tri.q}")
    print(f"s={co.s} t={co.t}")
    print(f"C={report.C} S={report.S} f={report.f} winner={report.winner}")
    return EXIT_OK


def cmd_bounds(n: int, m: int, as_json: bool = False, digits: int = 6) -> int:
    """Print the BoundReport for (n, m), as text or JSON."""
    report = build_bound_report(n, m)
    if report.D is None:
        logger.warning(f"de Caen bound undefined for n <= 1 (n={n}); reporting D as undefined")

    if as_json:
        print(json.dumps(report.to_dict(digits), indent=2))
        return EXIT_OK

    shown = report.display_values(digits)
    print(f"n={n} m={m}")
    print(f"C={report.C} S={report.S} f={report.f} winner={report.winner} subtle={int(report.subtle)}")
    if report.D is None:
        print("D=undefined")
    else:
        print(f"D={report.D} ~ {shown['D_display']}")
    print(f"F={report.F} ~ {shown['F_display']} branch={report.sharp_branch}")
    print(f"radical_lower={report.radical_lower} ~ {shown['radical_lo_display']}")
    print(f"radical_upper={report.radical_upper} ~ {shown['radical_hi_display']}")
    print(f"radical_applies={_yes_no(report.radical_applies)}"
          f" radical_below_de_caen_range={_yes_no(report.radical_below_de_caen_range)}"
          f" sharp_below_de_caen_range={_yes_no(report.sharp_below_de_caen_range)}")
    print(f"ratio D/f ~ {shown['ratio_display']}")
    return EXIT_OK


def cmd_construct(n: int, m: int, kind: str, out_path: Optional[Union[str, Path]] = None) -> int:
    """Build a quasi-complete, quasi-star or extremal graph and check its degree sum.

    Without out_path the edge list goes to stdout ahead of the summary line.
    """
    graph = BUILDERS[kind](n, m)
    label, formula = _TARGETS[kind]
    sumsq = sum_sq_degrees(graph)
    target = formula(n, m)

    if out_path is not None:
        write_edge_list(graph, out_path)
    else:
        print(format_edge_list(graph), end="")

    matched = sumsq == target
    print(f"sumsq={sumsq} {label}={target} {'match' if matched else 'mismatch'}")
    if not matched:
        logger.error(f"{kind}({n},{m}) has degree-square sum {sumsq}, expected {label}={target}")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_oracle(n: int, m: Optional[int], config: Dict[str, Any], allow_large: bool = False,
               progress: bool = False) -> int:
    """Compare the exhaustive maximum against f(n,m) for one m or every m."""
    settings = config['oracle']
    oracle = BruteForceOracle(
        cap=settings['cap'],
        allow_large=allow_large,
        chunk_size=settings['chunk_size'],
        jobs=settings['jobs'],
        progress=progress,
    )
    results = [oracle.max(n, m)] if m is not None else oracle.sweep(n)

    mismatches: List[int] = []
    for result in results:
        expected = f_exact(n, result.m)
        matched = result.max_value == expected
        if not matched:
            mismatches.append(result.m)
        if not result.witness.is_graphical():
            logger.error(f"Oracle witness for m={result.m} is not graphical: {result.witness.degrees}")
        print(f"n={n} m={result.m} oracle={result.max_value} f={expected} {'match' if matched else 'MISMATCH'}")

    if mismatches:
        logger.warning(f"Oracle disagrees with f at n={n} for m in {mismatches}")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_verify(sweep: SweepConfig, config: Dict[str, Any],
               root_gap_r_max: Optional[int] = None) -> int:
    """Run a verification sweep, write its results and the text report."""
    results_dir = Path(config['output']['results_dir'])
    verifier = SweepVerifier(sweep, results_dir=results_dir, root_gap_r_max=root_gap_r_max)
    summary = verifier.run()
    generate_verification_report(summary, results_dir / config['output']['report_name'])

    print(f"rows={summary.rows_visited} violations={len(summary.violations)} "
          f"counterexamples={summary.counterexamples} output={summary.out_path}")
    if summary.root_gap_r_max is not None:
        print(f"root_gap r<={summary.root_gap_r_max} failures={len(summary.root_gap_failures)}")
    for record in summary.violations[:10]:
        print(f"VIOLATION {record.check} n={record.n} m={record.m}: "
              f"{record.left_display} {record.relation} {record.right_display}")
    if sweep.wants_ratio and sweep.m_policy == 'list':
        # echo D/f at explicitly listed points
        for n in range(sweep.n_min, sweep.n_max + 1):
            for m in sweep.m_range(n):
                ratio = build_bound_report(n, m).ratio
                shown = 'undefined' if ratio is None else display(ratio, sweep.digits)
                print(f"n={n} m={m} D/f={shown}")
    return EXIT_OK if summary.passed else EXIT_VIOLATION
