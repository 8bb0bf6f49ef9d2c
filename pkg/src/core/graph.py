"""
Immutable multigraph with integer vertex and edge identities.

Edges are numbered 0..m-1 in input order. Each vertex keeps an incidence
list of (edge id, other endpoint) pairs in increasing edge order, which is
the order every traversal in the engine follows.
"""

from typing import Iterable, List, Sequence, Tuple

import networkx as nx
import numpy as np

from src.utils.exceptions import (
    IsolatedVertexError,
    NotSimpleError,
    SelfLoopError,
    VertexOutOfRangeError,
)

Incidence = List[Tuple[int, int]]


class Graph:
    """
    An undirected multigraph without self-loops or isolated vertices.

    Attributes:
        n: Vertex count
        m: Edge count
        endpoints: Per edge id, its (u, v) pair as given
        incidence: Per vertex, list of (edge id, other endpoint)
        is_simple: True iff no two edges share an unordered endpoint pair
        max_degree: The maximum vertex degree d
    """

    __slots__ = ('n', 'm', 'endpoints', 'incidence', 'is_simple', 'degrees', 'max_degree')

    def __init__(self, n: int, endpoints: List[Tuple[int, int]],
                 incidence: List[Incidence], is_simple: bool):
        self.n = n
        self.m = len(endpoints)
        self.endpoints = endpoints
        self.incidence = incidence
        self.is_simple = is_simple
        self.degrees = [len(inc) for inc in incidence]
        self.max_degree = max(self.degrees, default=0)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def other_endpoint(self, e: int, v: int) -> int:
        u, w = self.endpoints[e]
        return w if u == v else u

    def require_simple(self):
        """Raise NotSimpleError if the graph has parallel edges."""
        if not self.is_simple:
            raise NotSimpleError("This algorithm requires a simple graph (parallel edges found)")

    def to_networkx(self) -> nx.MultiGraph:
        """Export as a networkx multigraph keyed by edge id."""
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.n))
        for e, (u, v) in enumerate(self.endpoints):
            g.add_edge(u, v, key=e)
        return g

    def __repr__(self) -> str:
        kind = "simple" if self.is_simple else "multi"
        return f"Graph(n={self.n}, m={self.m}, d={self.max_degree}, {kind})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Build a Graph from a vertex count and an edge list.

    Args:
        n: Vertex count
        edges: Vertex pairs; edge ids follow the iteration order

    Returns:
        Graph with incidence lists and the simplicity flag

    Raises:
        VertexOutOfRangeError: If an endpoint lies outside [0, n)
        SelfLoopError: If an edge joins a vertex to itself
        IsolatedVertexError: If some vertex has no incident edge
    """
    endpoints: List[Tuple[int, int]] = []
    incidence: List[Incidence] = [[] for _ in range(n)]
    seen_pairs = set()
    is_simple = True

    for e, (u, v) in enumerate(edges):
        u, v = int(u), int(v)
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRangeError(e, x, n)
        if u == v:
            raise SelfLoopError(e, u)
        endpoints.append((u, v))
        incidence[u].append((e, v))
        incidence[v].append((e, u))
        pair = (u, v) if u < v else (v, u)
        if pair in seen_pairs:
            is_simple = False
        seen_pairs.add(pair)

    degrees = np.fromiter((len(inc) for inc in incidence), dtype=np.int64, count=n)
    isolated = np.flatnonzero(degrees == 0)
    if isolated.size:
        raise IsolatedVertexError(int(isolated[0]))

    return Graph(n, endpoints, incidence, is_simple)


def graph_from_networkx(g: nx.Graph) -> Graph:
    """
    Convert a networkx (multi)graph, relabelling nodes to 0..n-1 in sorted order.

    Raises:
        SelfLoopError, IsolatedVertexError: As for build_graph
    """
    nodes = sorted(g.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return build_graph(len(nodes), ((index[u], index[v]) for u, v in g.edges()))


def scope_degrees(graph: Graph, scope: Iterable[int]) -> dict:
    """Degree of every vertex touched by ``scope``, restricted to those edges."""
    degrees: dict = {}
    for e in scope:
        u, v = graph.endpoints[e]
        degrees[u] = degrees.get(u, 0) + 1
        degrees[v] = degrees.get(v, 0) + 1
    return degrees


def scope_max_degree(graph: Graph, scope: Iterable[int]) -> int:
    return max(scope_degrees(graph, scope).values(), default=0)
