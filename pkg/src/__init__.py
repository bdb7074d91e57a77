"""
Degree Square Extremes package.

Exact computation of the largest sum of squared degrees over graphs with a
given number of vertices and edges, its extremal constructions, the classical
upper bounds, and exhaustive and grid verification of the bounds.
"""

__version__ = "0.1.0"
__author__ = "Degree Square Extremes Team"
