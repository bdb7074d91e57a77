"""
Bound suite for the sum of squared degrees.

This module contains:
- Exact quadratic surds and their comparison
- De Caen's bound, the sharp two-branch bound and the radical bounds
- Exact checkers for every inequality relating them to f(n,m)
"""

from .bounds import (
    SHARP_DENSE,
    SHARP_SPARSE,
    BoundReport,
    RadicalBounds,
    ScaledSurd,
    asymptotic_de_caen_ratio,
    build_bound_report,
    de_caen_D,
    radical_below_de_caen_range,
    radical_bounds,
    sharp_below_de_caen_range,
    sharp_bound_branch,
    sharp_bound_F,
    sharp_bound_formulas,
    star_upper_range,
)
from .checks import (
    CHECKS,
    CheckResult,
    Link,
    Outcome,
    check_chain,
    check_clique_lower,
    check_clique_upper,
    check_complement_identity,
    check_de_caen_ratio,
    check_monotone,
    check_oracle_agreement,
    check_radical_below_de_caen,
    check_radical_sandwich,
    check_root_gap,
    check_root_gap_at,
    check_sharp_below_de_caen,
    check_sharp_max_form,
    check_sharp_sandwich,
    check_sharp_split,
    check_star_clique_identity,
    check_star_upper,
    de_caen_ratio_exceeds,
    tightness_anchors,
    verify_root_gap_range,
)
from .surd import Ordering, Surd, compare_with_certificate, display, surd_cmp, to_float

__all__ = [
    'SHARP_DENSE',
    'SHARP_SPARSE',
    'BoundReport',
    'CHECKS',
    'CheckResult',
    'Link',
    'Ordering',
    'Outcome',
    'RadicalBounds',
    'ScaledSurd',
    'Surd',
    'asymptotic_de_caen_ratio',
    'build_bound_report',
    'check_chain',
    'check_clique_lower',
    'check_clique_upper',
    'check_complement_identity',
    'check_de_caen_ratio',
    'check_monotone',
    'check_oracle_agreement',
    'check_radical_below_de_caen',
    'check_radical_sandwich',
    'check_root_gap',
    'check_root_gap_at',
    'check_sharp_below_de_caen',
    'check_sharp_max_form',
    'check_sharp_sandwich',
    'check_sharp_split',
    'check_star_clique_identity',
    'check_star_upper',
    'compare_with_certificate',
    'de_caen_D',
    'de_caen_ratio_exceeds',
    'display',
    'radical_below_de_caen_range',
    'radical_bounds',
    'sharp_below_de_caen_range',
    'sharp_bound_branch',
    'sharp_bound_F',
    'sharp_bound_formulas',
    'star_upper_range',
    'surd_cmp',
    'tightness_anchors',
    'to_float',
    'verify_root_gap_range',
]
