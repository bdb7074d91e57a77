"""
Exact Inequality Checkers.

Each checker certifies one inequality (or identity) about f(n,m), C(n,m),
S(n,m) and their bounds for a single argument, using exact comparisons only.
A checker answers HOLDS, NOT_APPLICABLE (outside its hypothesis), VACUOUS
(hypothesis degenerate), VIOLATED, or COUNTEREXAMPLE for a claimed link that
is known to be false, and keeps the compared values and the deciding integer
pair of every link so a failure can be reported in full.

Checkers take (n, m) and an optional BoundReport for the same pair; a sweep
builds the report once per row and shares it across every checker.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Optional, Tuple

from ..errors import RatioUndefinedError
from ..exact_core import (
    binom2,
    complement_transfer,
    f_exact,
    triangular_decompose,
    validate_counts,
    value_C,
)
from .bounds import (
    BoundReport,
    build_bound_report,
    de_caen_D,
    radical_bounds,
    star_upper_range,
    SHARP_DENSE,
)
from .surd import Certificate, ExactNumber, Ordering, Surd, compare_with_certificate

logger = logging.getLogger(__name__)


class Outcome(str, Enum):
    HOLDS = "holds"
    NOT_APPLICABLE = "not_applicable"
    VACUOUS = "vacuous"
    VIOLATED = "violated"
    COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True, eq=False)
class Link:
    """One exact comparison `left <relation> right`.

    An unproven link is a claimed comparison without a valid proof; when it
    fails the check reports COUNTEREXAMPLE instead of VIOLATED.
    """

    left: ExactNumber
    right: ExactNumber
    relation: str
    holds: bool
    certificate: Certificate
    proven: bool = True


@dataclass(frozen=True, eq=False)
class CheckResult:
    name: str
    outcome: Outcome
    links: Tuple[Link, ...] = ()

    @property
    def passed(self) -> bool:
        return self.outcome is not Outcome.VIOLATED

    def failed_links(self) -> Tuple[Link, ...]:
        return tuple(link for link in self.links if not link.holds)


def _link(left: ExactNumber, right: ExactNumber, relation: str, proven: bool = True) -> Link:
    order, cert = compare_with_certificate(left, right)
    if relation == "<":
        holds = order is Ordering.LESS
    elif relation == "<=":
        holds = order is not Ordering.GREATER
    elif relation == "==":
        holds = order is Ordering.EQUAL
    else:
        raise ValueError(f"unknown relation {relation!r}")
    return Link(left, right, relation, holds, cert, proven)


def _result(name: str, *links: Link) -> CheckResult:
    if any(not link.holds and link.proven for link in links):
        outcome = Outcome.VIOLATED
        logger.debug(f"{name} violated at link(s): {[l.relation for l in links if not l.holds]}")
    elif any(not link.holds for link in links):
        outcome = Outcome.COUNTEREXAMPLE
    else:
        outcome = Outcome.HOLDS
    return CheckResult(name, outcome, tuple(links))


def _not_applicable(name: str) -> CheckResult:
    return CheckResult(name, Outcome.NOT_APPLICABLE)


def _values(n: int, m: int, report: Optional[BoundReport]) -> BoundReport:
    return report if report is not None else build_bound_report(n, m)


def check_radical_sandwich(n: int, m: int, report: Optional[BoundReport] = None) -> CheckResult:
    """m*sqrt(8m+1) - 3m <= f(n,m) <= m*sqrt(8m+1) - m whenever 4m >= n(n-1)."""
    name = "radical_sandwich"
    values = _values(n, m, report)
    if not values.radical_applies:
        return _not_applicable(name)
    f = values.f
    return _result(name, _link(values.radical_lower, f, "<="), _link(f, values.radical_upper, "<="))


def check_radical_below_de_caen(n: int, m: int, report: Optional[BoundReport] = None) -> CheckResult:
    """m*sqrt(8m+1) - m < D(n,m) strictly whenever 2m < (n-1)(n-2) and m > 0.

    At m = 0 both sides are 0, so the strict claim is vacuous.
    """
    name = "radical_below_de_caen"
    values = _values(n, m, report)
    if not values.radical_below_de_caen_range:
        return _not_applicable(name)
    if m == 0:
        return CheckResult(name, Outcome.VACUOUS)
    return _result(name, _link(values.radical_upper, values.D, "<"))


def check_sharp_sandwich(n: int, m: int, report: Optional[BoundReport] = None) -> CheckResult:
    """F(n,m) - 4m <= f(n,m) <= F(n,m).

    The upper link is certified for every (n, m), and so is the lower link on
    the dense branch (4m >= n^2). On the sparse branch the lower link is
    unproven and fails for small m, first at (6, 1): 34*sqrt(34) - 196 > 2.
    """
    values = _values(n, m, report)
    F, f = values.F, values.f
    dense = values.sharp_branch == SHARP_DENSE
    return _result(
        "sharp_sandwich",
        _link(F - 4 * m, f, "<=", proven=dense),
        _link(f, F, "<="),
    )


def check_sharp_below_de_caen(n: int, m: int, report: Optional[BoundReport] = None) -> CheckResult:
    """F(n,m) < D(n,m) strictly whenever n^(3/2) < m < binom(n,2) - n^(3/2)."""
    name = "sharp_below_de_caen"
    values = _values(n, m, report)
    if not values.sharp_below_de_caen_range:
        return _not_applicable(name)
    return _result(name, _link(values.F, values.D, "<"))


def check_clique_lower(n: int, m: int, report: Optional[BoundReport] = None) -> CheckResult:
    """(2m)^(3/2) - 3m < m*sqrt(8m+1) - 3m <= C(n,m) for m > 0."""
    name = "clique_lower"
    values = _values(n, m, report)
    if m == 0:
        return CheckResult(name, Outcome.VACUOUS)
    lower = values.radical_lower
    return _result(
        name,
        _link(values.F_dense - 3 * m, lower, "<"),
        _link(lower, values.C, "<="),
    )


def check_clique_upper(n: int, m: int, report: Optional[BoundReport] = None) -> CheckResult:
    """C(n,m) <= m*sqrt(8m+1) - m for every (n, m)."""
    values = _values(n, m, report)
    return _result("clique_upper", _link(values.C, values.radical_upper, "<="))


def check_star_upper(n: int, m: int, report: Optional[BoundReport] = None) -> CheckResult:
    """S(n,m) <= (n^2 - 2m)^(3/2) + 4mn - n^3 whenever 4m <= n^2."""
    name = "star_upper"
    values = _values(n, m, report)
    if not star_upper_range(n, m):
        return _not_applicable(name)
    return _result(name, _link(values.S, values.F_sparse, "<="))


@lru_cache(maxsize=4096)
def check_root_gap(r: int) -> CheckResult:
    """sqrt((2r-1)^2 + 8(r-1)) > (2r^2 + 5r - 2)/(r + 2) for r >= 3."""
    name = "root_gap"
    if r < 3:
        return _not_applicable(name)
    left = Fraction(2 * r * r + 5 * r - 2, r + 2)
    right = Surd.sqrt((2 * r - 1) ** 2 + 8 * (r - 1))
    return _result(name, _link(left, right, "<"))


def check_root_gap_at(n: int, m: int, report: Optional[BoundReport] = None) -> CheckResult:
    """Root-gap inequality at the r of m's triangular decomposition."""
    if report is None:
        validate_counts(n, m)
    return check_root_gap(triangular_decompose(m).r)


def check_star_clique_identity(n: int, m: int, report: Optional[BoundReport] = None) -> CheckResult:
    """S(n,m) = C(n, binom(n,2) - m) + 4m(n-1) - n(n-1)^2."""
    values = _values(n, m, report)
    rhs = value_C(n, binom2(n) - m) + 4 * m * (n - 1) - n * (n - 1) ** 2
    return _result("star_clique_identity", _link(values.S, rhs, "=="))


def check_complement_identity(n: int, m: int, report: Optional[BoundReport] = None) -> CheckResult:
    """f(n, binom(n,2) - m) = f(n,m) + n(n-1)^2 - 4(n-1)m."""
    values = _values(n, m, report)
    transferred = complement_transfer(n, m, values.f)
    return _result("complement_identity", _link(transferred, f_exact(n, binom2(n) - m), "=="))


def check_monotone(n: int, m: int, report: Optional[BoundReport] = None) -> CheckResult:
    """f(n, m+1) >= f(n,m) + 2 for m < binom(n,2)."""
    name = "monotone"
    values = _values(n, m, report)
    if m == binom2(n):
        return _not_applicable(name)
    return _result(name, _link(values.f + 2, f_exact(n, m + 1), "<="))


def check_chain(n: int, m: int, report: Optional[BoundReport] = None) -> CheckResult:
    """(2m)^(3/2) - 3m < m*sqrt(8m+1) - 3m <= f <= m*sqrt(8m+1) - m <= (2m)^(3/2).

    Applies when 4m >= n(n-1); the strict first link needs m > 0.
    """
    name = "chain"
    values = _values(n, m, report)
    if not values.radical_applies:
        return _not_applicable(name)
    if m == 0:
        return CheckResult(name, Outcome.VACUOUS)
    cube = values.F_dense
    lower, upper, f = values.radical_lower, values.radical_upper, values.f
    return _result(
        name,
        _link(cube - 3 * m, lower, "<"),
        _link(lower, f, "<="),
        _link(f, upper, "<="),
        _link(upper, cube, "<="),
    )


def check_sharp_max_form(n: int, m: int, report: Optional[BoundReport] = None) -> CheckResult:
    """F(n,m) equals the larger of its two formulas."""
    values = _values(n, m, report)
    dense, sparse = values.F_dense, values.F_sparse
    larger = dense if dense >= sparse else sparse
    return _result("sharp_max_form", _link(values.F, larger, "=="))


def check_sharp_split(n: int, m: int, report: Optional[BoundReport] = None) -> CheckResult:
    """F - 4m <= C(n,m) on the dense branch and F - 4m <= S(n,m) on the sparse one.

    Only the dense link is certified; the sparse one is unproven and fails
    wherever the sharp sandwich's lower link does.
    """
    values = _values(n, m, report)
    if values.sharp_branch == SHARP_DENSE:
        return _result("sharp_split", _link(values.F - 4 * m, values.C, "<="))
    return _result("sharp_split", _link(values.F - 4 * m, values.S, "<=", proven=False))


def de_caen_ratio_exceeds(n: int, m: int, threshold_num: int, threshold_den: int) -> bool:
    """Whether D(n,m) > (threshold_num / threshold_den) * f(n,m), exactly.

    Args:
        n: Vertex count, n >= 2
        m: Edge count
        threshold_num: Threshold numerator (106 for 1.06)
        threshold_den: Threshold denominator (100 for 1.06)

    Returns:
        D * threshold_den > f * threshold_num
    """
    D = de_caen_D(n, m)
    f = f_exact(n, m)
    if f == 0:
        raise RatioUndefinedError(f"ratio undefined: f({n},{m}) = 0")
    # D = num/den with den > 0, so cross-multiplying keeps the direction
    return D.numerator * threshold_den > f * threshold_num * D.denominator


def check_de_caen_ratio(n: int, m: int, threshold_num: int = 106, threshold_den: int = 100,
                        report: Optional[BoundReport] = None) -> CheckResult:
    """D(n,m) > threshold * f(n,m), reported as a check."""
    name = "de_caen_ratio"
    values = _values(n, m, report)
    if values.D is None or values.f == 0:
        return _not_applicable(name)
    return _result(name, _link(Fraction(threshold_num, threshold_den) * values.f, values.D, "<"))


Checker = Callable[[int, int, Optional[BoundReport]], CheckResult]

# sweep key -> per-(n, m) checker
CHECKS: Dict[str, Checker] = {
    'radical_sandwich': check_radical_sandwich,
    'radical_below_de_caen': check_radical_below_de_caen,
    'sharp_sandwich': check_sharp_sandwich,
    'sharp_below_de_caen': check_sharp_below_de_caen,
    'clique_lower': check_clique_lower,
    'clique_upper': check_clique_upper,
    'star_upper': check_star_upper,
    'root_gap': check_root_gap_at,
    'star_clique_identity': check_star_clique_identity,
    'complement_identity': check_complement_identity,
    'monotone': check_monotone,
    'chain': check_chain,
    'sharp_max_form': check_sharp_max_form,
    'sharp_split': check_sharp_split,
}


def tightness_anchors(n: int) -> Dict[str, bool]:
    """Exact equalities expected at stars and complete graphs for n >= 2.

    Returns:
        Mapping of anchor name to whether the equality holds
    """
    full = binom2(n)
    return {
        'de_caen_star': de_caen_D(n, n - 1) == f_exact(n, n - 1),
        'de_caen_complete': de_caen_D(n, full) == f_exact(n, full),
        'radical_upper_complete': radical_bounds(n, full).upper == f_exact(n, full),
    }


def verify_root_gap_range(r_min: int, r_max: int) -> Tuple[int, ...]:
    """Certify the root-gap inequality for r_min <= r <= r_max.

    Returns:
        The r values that violate it (empty when all hold)
    """
    logger.info(f"Certifying root-gap inequality for {max(r_min, 3)} <= r <= {r_max}...")
    failures = tuple(r for r in range(max(r_min, 3), r_max + 1) if not check_root_gap(r).passed)
    if failures:
        logger.warning(f"Root-gap inequality fails at {len(failures)} values, first r={failures[0]}")
    else:
        logger.info("Root-gap inequality holds on the whole range")
    return failures


def check_oracle_agreement(n: int, m: int, oracle_max: Optional[int],
                           report: Optional[BoundReport] = None) -> CheckResult:
    """The exhaustive maximum equals f(n,m); not applicable without an oracle value."""
    if oracle_max is None:
        return _not_applicable("oracle")
    f = report.f if report is not None else f_exact(n, m)
    return _result("oracle", _link(oracle_max, f, "=="))
