"""
Constructions module for extremal graphs.

This module contains:
- Immutable labeled graphs, degree sequences and complementation
- The canonical edge-list format
- Quasi-complete, quasi-star and extremal graph builders
"""

from .builders import BUILDERS, extremal_graph, quasi_complete, quasi_star
from .graph import (
    DegreeSequence,
    Graph,
    complement,
    format_edge_list,
    parse_edge_list,
    read_edge_list,
    sum_sq_degrees,
    write_edge_list,
)

__all__ = [
    'BUILDERS',
    'DegreeSequence',
    'Graph',
    'complement',
    'extremal_graph',
    'format_edge_list',
    'parse_edge_list',
    'quasi_complete',
    'quasi_star',
    'read_edge_list',
    'sum_sq_degrees',
    'write_edge_list',
]
