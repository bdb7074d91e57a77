"""
Labeled Simple Graphs.

An immutable graph on vertices {0, ..., n-1}, its degree sequence, the first
Zagreb index (sum of squared degrees), complementation, and the canonical
edge-list text format:

    n m
    u v        (one line per edge, u < v, sorted by (u, v))
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import FrozenSet, Iterable, Tuple, Union

import networkx as nx

from ..errors import EdgeListFormatError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class DegreeSequence:
    """Degrees of vertices 0..n-1."""

    degrees: Tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    @property
    def sum_of_squares(self) -> int:
        return sum(d * d for d in self.degrees)

    def is_graphical(self) -> bool:
        """Whether some simple graph realizes this sequence."""
        return nx.is_graphical(list(self.degrees))


@dataclass(frozen=True)
class Graph:
    """Simple graph with n labeled vertices.

    Edges are stored as (u, v) with u < v; loops, repeated edges and
    endpoints outside 0..n-1 are rejected.
    """

    n: int
    edges: FrozenSet[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got n={self.n}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        edge_list = list(edges)
        graph = cls(n, frozenset(edge_list))
        if len(graph.edges) != len(edge_list):
            raise ValueError("duplicate edges")
        return graph

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Relabel a networkx graph's nodes 0..n-1 in sorted order."""
        relabeled = nx.convert_node_labels_to_integers(g, ordering="sorted")
        return cls(relabeled.number_of_nodes(), frozenset(relabeled.edges()))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree_sequence(self) -> DegreeSequence:
        degrees = [0] * self.n
        for u, v in self.edges:
            degrees[u] += 1
            degrees[v] += 1
        return DegreeSequence(tuple(degrees))

    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))


def sum_sq_degrees(g: Graph) -> int:
    """First Zagreb index: sum over vertices of degree squared."""
    return g.degree_sequence().sum_of_squares


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    return Graph(g.n, frozenset(pair for pair in combinations(range(g.n), 2) if pair not in g.edges))


def format_edge_list(g: Graph) -> str:
    """Canonical edge-list text, newline-terminated."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Inverse of format_edge_list."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise EdgeListFormatError("missing 'n m' header line")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except ValueError as e:
        raise EdgeListFormatError(f"malformed edge-list line: {e}") from e

    if len(edges) != m:
        raise EdgeListFormatError(f"header announces {m} edges, found {len(edges)}")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as e:
        raise EdgeListFormatError(str(e)) from e


def write_edge_list(g: Graph, path: Union[str, Path]) -> Path:
    """Write g in the canonical edge-list format."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_edge_list(g))
    logger.info(f"Saved graph with n={g.n}, m={g.m} to {path}")
    return path


def read_edge_list(path: Union[str, Path]) -> Graph:
    """Read a graph written by write_edge_list."""
    return parse_edge_list(Path(path).read_text())
