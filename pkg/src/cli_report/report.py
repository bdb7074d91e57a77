import logging
from datetime import datetime
from pathlib import Path
from typing import Union

from .verifier import SweepSummary

MAX_LISTED_VIOLATIONS = 20


def generate_verification_report(summary: SweepSummary, output_path: Union[str, Path]) -> None:
    logger = logging.getLogger(__name__)
    report_lines = []
    report_lines.append("Degree Square Extremes - Verification Report")
    report_lines.append("=" * 50)
    report_lines.append(f"Generated: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
    report_lines.append("")
    report_lines.append("SUMMARY")
    report_lines.append("-" * 20)
    report_lines.append(f"Vertex counts: {summary.n_min} - {summary.n_max}")
    report_lines.append(f"(n, m) pairs visited: {summary.rows_visited}")
    report_lines.append(f"Checks: {', '.join(summary.checks)}")
    report_lines.append(f"Violations: {len(summary.violations)}")
    report_lines.append(f"Counterexamples to unproven links: {summary.counterexamples}")
    if summary.out_path is not None:
        report_lines.append(f"Results file: {summary.out_path}")
    if summary.passed:
        report_lines.append("✓ Every selected check holds on the grid")
    else:
        report_lines.append("⚠ Violations found: see below")

    report_lines.append("")
    report_lines.append("OUTCOMES PER CHECK")
    report_lines.append("-" * 30)
    for name in summary.checks:
        counts = summary.tallies.get(name, {})
        line = f"{name}:"
        for outcome in ('holds', 'not_applicable', 'vacuous', 'counterexample', 'violated'):
            line += f" {outcome}={counts.get(outcome, 0)}"
        report_lines.append(line)

    if summary.root_gap_r_max is not None:
        report_lines.append("")
        report_lines.append("ROOT GAP RANGE")
        report_lines.append("-" * 30)
        report_lines.append(f"3 <= r <= {summary.root_gap_r_max}: {len(summary.root_gap_failures)} failures")
        if summary.root_gap_failures:
            shown = ', '.join(str(r) for r in summary.root_gap_failures[:MAX_LISTED_VIOLATIONS])
            report_lines.append(f"Failing r: {shown}")

    if summary.violations:
        report_lines.append("")
        report_lines.append(f"FIRST {min(len(summary.violations), MAX_LISTED_VIOLATIONS)} VIOLATIONS")
        report_lines.append("-" * 30)
        for record in summary.violations[:MAX_LISTED_VIOLATIONS]:
            line = f"{record.check} at n={record.n}, m={record.m}:"
            line += f" {record.left_display} {record.relation} {record.right_display} fails"
            line += f" | Exact: {record.left_exact} vs {record.right_exact}"
            line += f" | Certificate: {record.certificate[0]} vs {record.certificate[1]}"
            report_lines.append(line)

    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, 'w') as f:
        f.write('\n'.join(report_lines))
    logger.info(f"Verification report saved to {output_path}")
