"""
Upper and Lower Bounds on f(n,m).

De Caen's rational bound D(n,m), the two-branch sharp bound F(n,m), the
radical bounds m*sqrt(8m+1) - 3m and m*sqrt(8m+1) - m, and the BoundReport
that gathers every value for one (n, m).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, NamedTuple, Optional, Tuple

from ..errors import UndefinedBoundError
from ..exact_core import binom2, is_subtle, pick_winner, validate_counts, value_C, value_S
from .surd import Surd, display, to_float

logger = logging.getLogger(__name__)

SHARP_DENSE = "dense"    # 4m >= n^2: (2m)^(3/2)
SHARP_SPARSE = "sparse"  # 4m < n^2: (n^2 - 2m)^(3/2) + 4mn - n^3


def de_caen_D(n: int, m: int) -> Fraction:
    """De Caen's bound m(2m/(n-1) + n - 2) as a reduced fraction.

    Args:
        n: Vertex count, n >= 2
        m: Edge count, 0 <= m <= binom(n,2)

    Returns:
        m(2m + (n-2)(n-1)) / (n-1)
    """
    if n <= 1:
        raise UndefinedBoundError(f"de Caen bound undefined for n <= 1 (n={n})")
    validate_counts(n, m)
    return Fraction(m * (2 * m + (n - 2) * (n - 1)), n - 1)


def sharp_bound_branch(n: int, m: int) -> str:
    """Which formula of F(n,m) applies."""
    return SHARP_DENSE if 4 * m >= n * n else SHARP_SPARSE


def sharp_bound_formulas(n: int, m: int) -> Tuple[Surd, Surd]:
    """Both formulas of F(n,m), evaluated regardless of which branch applies.

    Returns:
        ((2m)^(3/2), (n^2 - 2m)^(3/2) + 4mn - n^3)
    """
    validate_counts(n, m)
    return _sharp_formulas(n, m)


def _sharp_formulas(n: int, m: int) -> Tuple[Surd, Surd]:
    dense = Surd.power_three_halves(2 * m)
    # n^2 - 2m >= n > 0 for every admissible m
    sparse = Surd.power_three_halves(n * n - 2 * m) + (4 * m * n - n ** 3)
    return dense, sparse


def sharp_bound_F(n: int, m: int) -> Surd:
    """The sharp two-branch upper bound F(n,m)."""
    dense, sparse = sharp_bound_formulas(n, m)
    return dense if sharp_bound_branch(n, m) == SHARP_DENSE else sparse


class RadicalBounds(NamedTuple):
    lower: Surd
    upper: Surd
    applies: bool


def radical_bounds(n: int, m: int) -> RadicalBounds:
    """m*sqrt(8m+1) - 3m and m*sqrt(8m+1) - m, valid around f when 4m >= n(n-1)."""
    validate_counts(n, m)
    return _radical_bounds(n, m)


def _radical_bounds(n: int, m: int) -> RadicalBounds:
    root = Surd(0, m, 8 * m + 1)
    return RadicalBounds(lower=root - 3 * m, upper=root - m, applies=4 * m >= n * (n - 1))


def radical_below_de_caen_range(n: int, m: int) -> bool:
    """2m < (n-1)(n-2), where the radical upper bound beats de Caen's bound."""
    return n >= 2 and 2 * m < (n - 1) * (n - 2)


def sharp_below_de_caen_range(n: int, m: int) -> bool:
    """n^(3/2) < m < binom(n,2) - n^(3/2), tested with integers only."""
    co_m = binom2(n) - m
    cube = n ** 3
    return n >= 2 and m > 0 and co_m > 0 and m * m > cube and co_m * co_m > cube


def star_upper_range(n: int, m: int) -> bool:
    """4m <= n^2, where S(n,m) stays below the sparse formula of F."""
    return 4 * m <= n * n


class ScaledSurd(NamedTuple):
    """Exact value numerator / denominator with a Surd numerator."""

    numerator: Surd
    denominator: int

    def __float__(self) -> float:
        return to_float(self.numerator) / self.denominator


def asymptotic_de_caen_ratio() -> ScaledSurd:
    """3/(2*sqrt(2)) = 3*sqrt(2)/4, the limit of D/f around m = n^2/4."""
    return ScaledSurd(Surd.sqrt(2) * 3, 4)


@dataclass(frozen=True, eq=False)
class BoundReport:
    """Every value and bound for one (n, m)."""

    n: int
    m: int
    C: int
    S: int
    f: int
    winner: str
    D: Optional[Fraction]
    F: Surd
    F_dense: Surd
    F_sparse: Surd
    sharp_branch: str
    radical_lower: Surd
    radical_upper: Surd
    radical_applies: bool
    radical_below_de_caen_range: bool
    sharp_below_de_caen_range: bool
    subtle: bool

    @property
    def ratio(self) -> Optional[Fraction]:
        """D/f, exact, when both are defined and f > 0."""
        if self.D is None or self.f == 0:
            return None
        return self.D / self.f

    def display_values(self, digits: int = 6) -> Dict[str, str]:
        """Decimal renderings of the irrational fields. Display only."""
        ratio = self.ratio
        return {
            'D_display': display(self.D, digits) if self.D is not None else 'undefined',
            'F_display': display(self.F, digits),
            'radical_lo_display': display(self.radical_lower, digits),
            'radical_hi_display': display(self.radical_upper, digits),
            'ratio_display': display(ratio, digits) if ratio is not None else 'undefined',
        }

    def to_dict(self, digits: int = 6) -> Dict[str, object]:
        """Exact fields plus display strings, JSON-ready."""
        return {
            'n': self.n,
            'm': self.m,
            'C': self.C,
            'S': self.S,
            'f': self.f,
            'winner': self.winner,
            'subtle': self.subtle,
            'D': None if self.D is None else {'num': self.D.numerator, 'den': self.D.denominator},
            'F': _surd_dict(self.F),
            'sharp_branch': self.sharp_branch,
            'radical_lower': _surd_dict(self.radical_lower),
            'radical_upper': _surd_dict(self.radical_upper),
            'radical_applies': self.radical_applies,
            'radical_below_de_caen_range': self.radical_below_de_caen_range,
            'sharp_below_de_caen_range': self.sharp_below_de_caen_range,
            **self.display_values(digits),
        }


def _surd_dict(value: Surd) -> Dict[str, int]:
    return {'p': value.p, 'c': value.c, 'k': value.k}


def build_bound_report(n: int, m: int) -> BoundReport:
    """Collect C, S, f, D, F and the radical bounds for (n, m).

    Args:
        n: Vertex count
        m: Edge count

    Returns:
        BoundReport; D is None when n <= 1
    """
    validate_counts(n, m)
    try:
        D = de_caen_D(n, m)
    except UndefinedBoundError as e:
        logger.debug(f"{e}; reporting D as undefined")
        D = None

    C, S = value_C(n, m), value_S(n, m)
    dense, sparse = _sharp_formulas(n, m)
    branch = sharp_bound_branch(n, m)
    radical = _radical_bounds(n, m)
    return BoundReport(
        n=n,
        m=m,
        C=C,
        S=S,
        f=max(C, S),
        winner=pick_winner(C, S),
        D=D,
        F=dense if branch == SHARP_DENSE else sparse,
        F_dense=dense,
        F_sparse=sparse,
        sharp_branch=branch,
        radical_lower=radical.lower,
        radical_upper=radical.upper,
        radical_applies=radical.applies,
        radical_below_de_caen_range=radical_below_de_caen_range(n, m),
        sharp_below_de_caen_range=sharp_below_de_caen_range(n, m),
        subtle=is_subtle(n, m),
    )
