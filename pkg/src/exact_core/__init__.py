"""
Exact core for the sum of squared degrees.

This module contains:
- Triangular and co-triangular decompositions of edge counts
- Closed forms C(n,m), S(n,m) and f(n,m) = max{C, S}
- The complement transfer of f between m and binom(n,2) - m
"""

from .decomposition import (
    CoDecomp,
    TriDecomp,
    binom2,
    co_decompose,
    isqrt,
    triangular_decompose,
    validate_counts,
)
from .values import (
    WINNER_C,
    WINNER_S,
    WINNER_TIE,
    ExactValue,
    complement_transfer,
    f_exact,
    is_subtle,
    pick_winner,
    value_C,
    value_S,
    winner,
)

__all__ = [
    'CoDecomp',
    'TriDecomp',
    'ExactValue',
    'WINNER_C',
    'WINNER_S',
    'WINNER_TIE',
    'binom2',
    'co_decompose',
    'complement_transfer',
    'f_exact',
    'is_subtle',
    'isqrt',
    'pick_winner',
    'triangular_decompose',
    'validate_counts',
    'value_C',
    'value_S',
    'winner',
]
