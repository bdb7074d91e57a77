"""
Exact Degree-Square Maxima.

Closed forms for C(n,m) (quasi-complete graphs), S(n,m) (quasi-star graphs)
and f(n,m) = max{C, S}, the largest sum of squared degrees over all graphs
with n vertices and m edges.
"""

import logging

from .decomposition import co_decompose, triangular_decompose, validate_counts

logger = logging.getLogger(__name__)

# C, S and f are always integers
ExactValue = int

WINNER_C = "C"
WINNER_S = "S"
WINNER_TIE = "tie"


def value_C(n: int, m: int) -> ExactValue:
    """Sum of squared degrees of the quasi-complete graph with m edges.

    Args:
        n: Vertex count
        m: Edge count, 0 <= m <= binom(n,2)

    Returns:
        2m(r-1) + q(q+1) where m = binom(r,2) + q
    """
    validate_counts(n, m)
    tri = triangular_decompose(m)
    return 2 * m * (tri.r - 1) + tri.q * (tri.q + 1)


def value_S(n: int, m: int) -> ExactValue:
    """Sum of squared degrees of the quasi-star graph with m edges.

    Args:
        n: Vertex count
        m: Edge count, 0 <= m <= binom(n,2)

    Returns:
        (n(n-1) - 2m)(s-1) + t(t+1) + 4m(n-1) - (n-1)^2 n
    """
    co = co_decompose(n, m)
    return (
        (n * (n - 1) - 2 * m) * (co.s - 1)
        + co.t * (co.t + 1)
        + 4 * m * (n - 1)
        - (n - 1) ** 2 * n
    )


def f_exact(n: int, m: int) -> ExactValue:
    """Maximum sum of squared degrees over graphs with n vertices and m edges."""
    return max(value_C(n, m), value_S(n, m))


def winner(n: int, m: int) -> str:
    """Which closed form attains f(n,m): "C", "S" or "tie"."""
    return pick_winner(value_C(n, m), value_S(n, m))


def pick_winner(c: ExactValue, s: ExactValue) -> str:
    """Winner label for already computed C and S."""
    if c > s:
        return WINNER_C
    if s > c:
        return WINNER_S
    return WINNER_TIE


def complement_transfer(n: int, m: int, f_of_m: ExactValue) -> ExactValue:
    """Carry f(n,m) over to the complementary edge count.

    Complementation maps each degree d to n-1-d, so a graph with m edges and
    degree-square sum X has a complement with binom(n,2) - m edges and sum
    X + n(n-1)^2 - 4(n-1)m.

    Args:
        n: Vertex count
        m: Edge count of the known side, 0 <= m <= binom(n,2)
        f_of_m: f(n,m)

    Returns:
        f(n, binom(n,2) - m)
    """
    validate_counts(n, m)
    return f_of_m + n * (n - 1) ** 2 - 4 * (n - 1) * m


def is_subtle(n: int, m: int) -> bool:
    """Whether (n,m) lies in the region |m - n(n-1)/4| < n/2 where C and S race closely."""
    return abs(4 * m - n * (n - 1)) < 2 * n

