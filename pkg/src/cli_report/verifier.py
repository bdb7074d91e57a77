"""
Sweep verification.

Runs the selected exact checks over every (n, m) of a grid and streams the
per-row results to CSV or JSON. Vertex counts are independent, so they may be
evaluated in a process pool; results are consumed in n order and written by
this process only.
"""

import json
import logging
import multiprocessing as mp
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, IO, Iterator, List, Optional, Tuple, Union

import pandas as pd
from tqdm import tqdm

from ..bound_suite import (
    CHECKS,
    BoundReport,
    CheckResult,
    Outcome,
    build_bound_report,
    check_de_caen_ratio,
    check_oracle_agreement,
    display,
    verify_root_gap_range,
)
from ..oracle import BruteForceOracle
from .config import ORACLE_CHECK, RATIO_CHECK, SweepConfig

logger = logging.getLogger(__name__)

BASE_COLUMNS: Tuple[str, ...] = (
    'n', 'm', 'C', 'S', 'f', 'winner', 'D_num', 'D_den',
    'F_display', 'th1_lo_display', 'th1_hi_display',
)
RATIO_COLUMN = 'ratio_x100_display'


def csv_header(config: SweepConfig) -> List[str]:
    """Column order of the sweep CSV for this configuration."""
    columns = [*BASE_COLUMNS, *config.checks, 'subtle']
    if config.wants_ratio:
        columns.append(RATIO_COLUMN)
    return columns


@dataclass(frozen=True)
class ViolationRecord:
    """One failed exact comparison."""

    check: str
    n: int
    m: int
    relation: str
    left_display: str
    right_display: str
    left_exact: str
    right_exact: str
    certificate: Tuple[int, int]

    def to_dict(self) -> Dict[str, Any]:
        record = asdict(self)
        record['certificate'] = list(self.certificate)
        return record


@dataclass
class VertexBlock:
    """Everything evaluated at one vertex count."""

    n: int
    rows: List[Dict[str, Any]] = field(default_factory=list)
    exact_rows: List[Dict[str, Any]] = field(default_factory=list)
    violations: List[ViolationRecord] = field(default_factory=list)
    tallies: Dict[str, Counter] = field(default_factory=dict)


@dataclass
class SweepSummary:
    """Outcome of a verification sweep."""

    n_min: int
    n_max: int
    checks: Tuple[str, ...]
    rows_visited: int = 0
    tallies: Dict[str, Dict[str, int]] = field(default_factory=dict)
    violations: List[ViolationRecord] = field(default_factory=list)
    root_gap_r_max: Optional[int] = None
    root_gap_failures: Tuple[int, ...] = ()
    out_path: Optional[Path] = None
    violations_path: Optional[Path] = None

    @property
    def passed(self) -> bool:
        return not self.violations and not self.root_gap_failures

    @property
    def counterexamples(self) -> int:
        """Rows where an unproven link fails; never counted as violations."""
        return sum(counts.get(Outcome.COUNTEREXAMPLE.value, 0) for counts in self.tallies.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n_min': self.n_min,
            'n_max': self.n_max,
            'checks': list(self.checks),
            'rows_visited': self.rows_visited,
            'violations': len(self.violations),
            'counterexamples': self.counterexamples,
            'tallies': self.tallies,
            'root_gap_r_max': self.root_gap_r_max,
            'root_gap_failures': list(self.root_gap_failures),
            'passed': self.passed,
        }


def _exact_text(value: Any) -> str:
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def _violations(result: CheckResult, n: int, m: int, digits: int) -> List[ViolationRecord]:
    return [
        ViolationRecord(
            check=result.name,
            n=n,
            m=m,
            relation=link.relation,
            left_display=display(link.left, digits),
            right_display=display(link.right, digits),
            left_exact=_exact_text(link.left),
            right_exact=_exact_text(link.right),
            certificate=link.certificate,
        )
        for link in result.failed_links()
        if link.proven
    ]


def _oracle_maxima(n: int, config: SweepConfig) -> Optional[Dict[int, int]]:
    if ORACLE_CHECK not in config.checks or n > config.oracle_cap:
        return None
    oracle = BruteForceOracle(cap=config.oracle_cap, chunk_size=config.oracle_chunk_size)
    return {result.m: result.max_value for result in oracle.sweep(n)}


def _run_check(name: str, n: int, m: int, report: BoundReport, config: SweepConfig,
               oracle_maxima: Optional[Dict[int, int]]) -> CheckResult:
    if name == ORACLE_CHECK:
        oracle_max = None if oracle_maxima is None else oracle_maxima[m]
        return check_oracle_agreement(n, m, oracle_max, report=report)
    if name == RATIO_CHECK:
        num, den = config.ratio_threshold
        return check_de_caen_ratio(n, m, num, den, report=report)
    return CHECKS[name](n, m, report)


def evaluate_vertex_count(task: Tuple[int, SweepConfig]) -> VertexBlock:
    """Run the selected checks on every visited m at one vertex count.

    The BoundReport of each (n, m) is built once and shared by every check.

    Args:
        task: (n, config); a single tuple so the function maps over a Pool

    Returns:
        VertexBlock with CSV rows, JSON rows (json format only), violations and tallies
    """
    n, config = task
    block = VertexBlock(n=n, tallies={name: Counter() for name in config.checks})
    oracle_maxima = _oracle_maxima(n, config)
    as_json = config.fmt == 'json'

    for m in config.m_range(n):
        report = build_bound_report(n, m)
        D = report.D
        row: Dict[str, Any] = {
            'n': n,
            'm': m,
            'C': report.C,
            'S': report.S,
            'f': report.f,
            'winner': report.winner,
            'D_num': None if D is None else D.numerator,
            'D_den': None if D is None else D.denominator,
            'F_display': display(report.F, config.digits),
            'th1_lo_display': display(report.radical_lower, config.digits),
            'th1_hi_display': display(report.radical_upper, config.digits),
        }
        certificates: Dict[str, List[List[int]]] = {}

        for name in config.checks:
            result = _run_check(name, n, m, report, config, oracle_maxima)
            outcome = result.outcome
            row[name] = outcome.value
            block.tallies[name][outcome.value] += 1
            if as_json:
                certificates[name] = [list(link.certificate) for link in result.links]
            if outcome is Outcome.VIOLATED:
                block.violations.extend(_violations(result, n, m, config.digits))

        row['subtle'] = int(report.subtle)
        if config.wants_ratio:
            ratio = report.ratio
            row[RATIO_COLUMN] = 'undefined' if ratio is None else display(100 * ratio, config.digits)
        block.rows.append(row)

        if as_json:
            exact = report.to_dict(config.digits)
            exact['checks'] = {name: row[name] for name in config.checks}
            exact['certificates'] = certificates
            if config.wants_ratio:
                exact[RATIO_COLUMN] = row[RATIO_COLUMN]
            block.exact_rows.append(exact)

    return block


class SweepVerifier:
    """Grid verifier writing one row per visited (n, m)."""

    def __init__(self, config: SweepConfig, results_dir: Union[str, Path] = "results",
                 root_gap_r_max: Optional[int] = None):
        """Initialize the verifier.

        Args:
            config: Validated sweep configuration
            results_dir: Directory for default output files
            root_gap_r_max: Also certify the root gap for 3 <= r <= this bound
        """
        config.validate()
        self.config = config
        self.results_dir = Path(results_dir)
        self.root_gap_r_max = root_gap_r_max
        self.out_path = config.resolved_out_path(self.results_dir)

    def _blocks(self) -> Iterator[VertexBlock]:
        tasks = [(n, self.config) for n in range(self.config.n_min, self.config.n_max + 1)]
        bar = tqdm(total=len(tasks), desc="verify", unit="n", disable=not self.config.progress)
        try:
            if self.config.jobs > 1 and len(tasks) > 1:
                with mp.Pool(self.config.jobs) as pool:
                    # imap keeps n order regardless of completion order
                    for block in pool.imap(evaluate_vertex_count, tasks):
                        bar.update()
                        yield block
            else:
                for task in tasks:
                    block = evaluate_vertex_count(task)
                    bar.update()
                    yield block
        finally:
            bar.close()

    def run(self) -> SweepSummary:
        """Run the sweep and write its output files.

        Returns:
            SweepSummary; passed is False on any violation
        """
        config = self.config
        logger.info("=== Running Sweep Verification ===")
        logger.info(f"n in [{config.n_min}, {config.n_max}], m policy {config.m_policy}, "
                    f"checks: {', '.join(config.checks)}")

        summary = SweepSummary(n_min=config.n_min, n_max=config.n_max, checks=config.checks,
                               out_path=self.out_path)
        tallies: Dict[str, Counter] = {name: Counter() for name in config.checks}

        self.out_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.out_path, "w", newline="") as out:
            writer = _CsvWriter(out, csv_header(config)) if config.fmt == 'csv' else _JsonWriter(out)
            for block in self._blocks():
                writer.write_block(block)
                summary.rows_visited += len(block.rows)
                summary.violations.extend(block.violations)
                for name, counts in block.tallies.items():
                    tallies[name].update(counts)
                for record in block.violations:
                    logger.warning(f"Violation: {record.check} at n={record.n}, m={record.m}: "
                                   f"{record.left_exact} {record.relation} {record.right_exact} fails")

            summary.tallies = {name: dict(counts) for name, counts in tallies.items()}
            if self.root_gap_r_max is not None:
                summary.root_gap_r_max = self.root_gap_r_max
                summary.root_gap_failures = verify_root_gap_range(3, self.root_gap_r_max)
                logger.info(f"Root gap checked for 3 <= r <= {self.root_gap_r_max}: "
                            f"{len(summary.root_gap_failures)} failures")
            writer.finish(summary)

        if config.fmt == 'csv' and summary.violations:
            summary.violations_path = self.out_path.with_name(f"{self.out_path.stem}_violations.csv")
            pd.DataFrame([record.to_dict() for record in summary.violations]).to_csv(
                summary.violations_path, index=False, lineterminator="\n"
            )
            logger.info(f"Violations saved to {summary.violations_path}")

        logger.info(f"Visited {summary.rows_visited} (n, m) pairs, {len(summary.violations)} violations, "
                    f"{summary.counterexamples} counterexamples to unproven links")
        logger.info(f"Results saved to {self.out_path}")
        return summary


class _CsvWriter:
    def __init__(self, out: IO[str], columns: List[str]):
        self.out = out
        self.columns = columns
        out.write(",".join(columns) + "\n")

    def write_block(self, block: VertexBlock) -> None:
        if not block.rows:
            return
        # object dtype keeps big integers exact and leaves missing D cells empty
        frame = pd.DataFrame(block.rows, columns=self.columns, dtype=object)
        frame.to_csv(self.out, header=False, index=False, lineterminator="\n")

    def finish(self, summary: SweepSummary) -> None:
        pass


class _JsonWriter:
    def __init__(self, out: IO[str]):
        self.out = out
        self.first = True
        out.write('{"rows": [')

    def write_block(self, block: VertexBlock) -> None:
        for row in block.exact_rows:
            self.out.write("\n" if self.first else ",\n")
            self.out.write(json.dumps(row))
            self.first = False

    def finish(self, summary: SweepSummary) -> None:
        self.out.write('\n],\n"violations": ')
        self.out.write(json.dumps([record.to_dict() for record in summary.violations]))
        self.out.write(',\n"summary": ')
        self.out.write(json.dumps(summary.to_dict()))
        self.out.write('}\n')
