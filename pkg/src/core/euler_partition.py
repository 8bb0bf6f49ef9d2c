"""
Euler partition: split a scope into two halves of roughly half the degree.

Tours are extracted greedily with a per-vertex cursor over the incidence
lists, so each edge is looked at a constant number of times. Open tours
start at odd-degree vertices (lowest first) and end at another odd-degree
vertex; what remains has only even degrees and splits into closed tours.
Edges are then assigned alternately along every tour.

An odd-length tour gives one extra edge to the side it starts on; these
extras alternate between sides so the halves differ by at most one edge.
An odd closed tour also puts two consecutive edges on that side at its
start vertex. The tour is rotated to start where this does the least harm:
preferably at a vertex already leaning to the other side, otherwise at a
vertex of minimum degree. No side degree exceeds ceil(deg/2) + 1.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.core.graph import Graph
from src.utils.performance_monitor import PartitionRecord


@dataclass
class Partition:
    """Two halves of a scope, each in the scope's order."""
    left: List[int]
    right: List[int]
    record: PartitionRecord


def _extract_tours(num_vertices: int, incidence: List[List[Tuple[int, int]]],
                   num_edges: int) -> List[Tuple[List[Tuple[int, int]], bool]]:
    """
    Decompose all edges into tours.

    Returns:
        List of (tour, closed) with tour a list of (local edge, vertex it leaves from)
    """
    cursor = [0] * num_vertices
    used = bytearray(num_edges)
    remaining = [len(inc) for inc in incidence]

    def walk(start: int) -> List[Tuple[int, int]]:
        tour = []
        x = start
        while True:
            inc = incidence[x]
            pos = cursor[x]
            while pos < len(inc) and used[inc[pos][0]]:
                pos += 1
            cursor[x] = pos
            if pos == len(inc):
                return tour
            edge, y = inc[pos]
            used[edge] = 1
            remaining[x] -= 1
            remaining[y] -= 1
            tour.append((edge, x))
            x = y

    tours = []
    for x in range(num_vertices):
        if remaining[x] % 2 == 1:
            tours.append((walk(x), False))
    for x in range(num_vertices):
        while remaining[x] > 0:
            tours.append((walk(x), True))
    return tours


def euler_partition(graph: Graph, scope: Sequence[int]) -> Partition:
    """
    Split ``scope`` into two edge sets by alternating along Euler tours.

    Args:
        graph: The graph owning the edges
        scope: Nonempty edge ids; the halves keep this order

    Returns:
        Partition with halves of sizes floor(m/2) and ceil(m/2)

    Raises:
        ValueError: If scope is empty
    """
    scope = list(scope)
    if not scope:
        raise ValueError("Cannot partition an empty scope")

    endpoints = graph.endpoints
    vertices = sorted({x for e in scope for x in endpoints[e]})
    local = {v: i for i, v in enumerate(vertices)}
    num_vertices = len(vertices)
    incidence: List[List[Tuple[int, int]]] = [[] for _ in range(num_vertices)]
    edge_ends: List[Tuple[int, int]] = []
    for i, e in enumerate(scope):
        u, v = local[endpoints[e][0]], local[endpoints[e][1]]
        incidence[u].append((i, v))
        incidence[v].append((i, u))
        edge_ends.append((u, v))
    degree = [len(inc) for inc in incidence]

    side = bytearray(len(scope))
    imbalance = [0] * num_vertices  # side-0 edges minus side-1 edges so far
    extra_side = 0
    odd_closed = 0

    for tour, closed in _extract_tours(num_vertices, incidence, len(scope)):
        length = len(tour)
        if length % 2 == 1:
            first = extra_side
            extra_side ^= 1
            if closed:
                odd_closed += 1
                tour = _rotate_odd_tour(tour, first, degree, imbalance, vertices)
        else:
            first = 1 if imbalance[tour[0][1]] > 0 and not closed else 0

        for position, (edge, _) in enumerate(tour):
            s = (first + position) & 1
            side[edge] = s
            delta = 1 if s == 0 else -1
            u, v = edge_ends[edge]
            imbalance[u] += delta
            imbalance[v] += delta

    left = [e for i, e in enumerate(scope) if side[i] == 0]
    right = [e for i, e in enumerate(scope) if side[i] == 1]

    excess_vertices = 0
    max_excess = 0
    for x in range(num_vertices):
        larger = (degree[x] + abs(imbalance[x])) // 2
        excess = larger - (degree[x] + 1) // 2
        if excess > 0:
            excess_vertices += 1
            max_excess = max(max_excess, excess)

    record = PartitionRecord(m=len(scope), left=len(left), right=len(right),
                             odd_closed_tours=odd_closed, excess_vertices=excess_vertices,
                             max_excess=max_excess)
    return Partition(left, right, record)


def _rotate_odd_tour(tour: List[Tuple[int, int]], first: int, degree: List[int],
                     imbalance: List[int], vertices: List[int]) -> List[Tuple[int, int]]:
    """Rotate a closed odd tour so the doubled side lands where it hurts least."""
    best = None
    best_position = 0
    for position, (_, x) in enumerate(tour):
        lean = imbalance[x] if first == 0 else -imbalance[x]
        excess = (degree[x] + lean + 2) // 2 - (degree[x] + 1) // 2
        key = (max(excess, 0), degree[x], vertices[x])
        if best is None or key < best:
            best = key
            best_position = position
    return tour[best_position:] + tour[:best_position]
