"""
Oracle module: exhaustive ground truth for f(n,m) at small n.
"""

from .brute_force import (
    DEFAULT_CAP,
    DEFAULT_CHUNK_SIZE,
    HARD_LIMIT,
    BruteForceOracle,
    OracleResult,
    brute_force_max,
    brute_force_sweep,
)

__all__ = [
    'DEFAULT_CAP',
    'DEFAULT_CHUNK_SIZE',
    'HARD_LIMIT',
    'BruteForceOracle',
    'OracleResult',
    'brute_force_max',
    'brute_force_sweep',
]
