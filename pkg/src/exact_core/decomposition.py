"""
Triangular Decompositions.

Writes an edge count m uniquely as m = binom(r,2) + q with 0 <= q < r, and the
co-count binom(n,2) - m as binom(s,2) + t with 0 <= t < s. Everything here is
unbounded integer arithmetic.
"""

import logging
import math
from dataclasses import dataclass

from ..errors import EdgeCountError, NegativeRadicandError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TriDecomp:
    """The unique (r, q) with m = r(r-1)/2 + q and 0 <= q < r."""

    r: int
    q: int


@dataclass(frozen=True)
class CoDecomp:
    """The unique (s, t) with binom(n,2) - m = s(s-1)/2 + t and 0 <= t < s."""

    s: int
    t: int


def isqrt(x: int) -> int:
    """Floor of the square root of a nonnegative integer.

    Args:
        x: Radicand, x >= 0

    Returns:
        v with v*v <= x < (v+1)*(v+1)
    """
    if x < 0:
        raise NegativeRadicandError(f"negative radicand: {x}")
    return math.isqrt(x)


def binom2(x: int) -> int:
    """x(x-1)/2, exact."""
    return x * (x - 1) // 2


def validate_counts(n: int, m: int) -> None:
    """Check that (n, m) describes a simple graph.

    Args:
        n: Vertex count, n >= 1
        m: Edge count, 0 <= m <= binom(n,2)
    """
    if n < 1:
        raise EdgeCountError(f"vertex count must be >= 1, got n={n}")
    if m < 0:
        raise EdgeCountError(f"edge count must be >= 0, got m={m}")
    if m > binom2(n):
        raise EdgeCountError(f"edge count exceeds binom(n,2): n={n}, m={m}, binom(n,2)={binom2(n)}")


def triangular_decompose(m: int) -> TriDecomp:
    """Decompose m as binom(r,2) + q with 0 <= q < r.

    Args:
        m: Edge count, m >= 0

    Returns:
        TriDecomp; m = 0 gives (r=1, q=0)
    """
    if m < 0:
        raise EdgeCountError(f"edge count must be >= 0, got m={m}")

    r = (1 + isqrt(8 * m + 1)) // 2
    # settle r onto binom(r,2) <= m < binom(r+1,2)
    while binom2(r) > m:
        r -= 1
    while binom2(r + 1) <= m:
        r += 1
    q = m - binom2(r)

    assert 0 <= q < r, f"decomposition invariant broken for m={m}: r={r}, q={q}"
    return TriDecomp(r=r, q=q)


def co_decompose(n: int, m: int) -> CoDecomp:
    """Decompose the co-count binom(n,2) - m as binom(s,2) + t with 0 <= t < s.

    Args:
        n: Vertex count
        m: Edge count, 0 <= m <= binom(n,2)

    Returns:
        CoDecomp
    """
    validate_counts(n, m)
    tri = triangular_decompose(binom2(n) - m)
    return CoDecomp(s=tri.r, t=tri.q)
