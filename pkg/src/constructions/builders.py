"""
Extremal Graph Builders.

Quasi-complete graphs realize C(n,m): a clique on vertices 0..r-1, vertex r
joined to vertices 0..q-1, the rest isolated, where m = binom(r,2) + q.
Quasi-star graphs realize S(n,m) as complements of quasi-complete graphs with
binom(n,2) - m edges.
"""

import logging
from itertools import combinations
from typing import Callable, Dict

from ..errors import ConstructionError
from ..exact_core import binom2, triangular_decompose, validate_counts, value_C, value_S
from .graph import Graph, complement

logger = logging.getLogger(__name__)


def quasi_complete(n: int, m: int) -> Graph:
    """Quasi-complete graph with n vertices and m edges.

    Args:
        n: Vertex count
        m: Edge count, 0 <= m <= binom(n,2)

    Returns:
        Graph whose sum of squared degrees equals C(n,m)

    Raises:
        ConstructionError: the clique and attachment vertex need more than n
            vertices, which is exactly the case m > binom(n,2)
    """
    tri = triangular_decompose(m)
    required = tri.r + (1 if tri.q > 0 else 0)
    if n < required:
        raise ConstructionError(f"n < required vertex count: n={n}, need {required} for m={m}")

    clique = combinations(range(tri.r), 2)
    attachment = ((i, tri.r) for i in range(tri.q))
    return Graph(n, frozenset([*clique, *attachment]))


def quasi_star(n: int, m: int) -> Graph:
    """Quasi-star graph with n vertices and m edges.

    Returns:
        Complement of quasi_complete(n, binom(n,2) - m); its sum of squared
        degrees equals S(n,m)
    """
    validate_counts(n, m)
    return complement(quasi_complete(n, binom2(n) - m))


def extremal_graph(n: int, m: int) -> Graph:
    """A graph attaining f(n,m); ties go to the quasi-complete graph."""
    if value_C(n, m) >= value_S(n, m):
        logger.debug(f"extremal({n},{m}): quasi-complete")
        return quasi_complete(n, m)
    logger.debug(f"extremal({n},{m}): quasi-star")
    return quasi_star(n, m)


BUILDERS: Dict[str, Callable[[int, int], Graph]] = {
    'qc': quasi_complete,
    'qs': quasi_star,
    'extremal': extremal_graph,
}
