"""
Independent checks of edge colorings and a brute-force chromatic index oracle.
"""

import json
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Sequence, Tuple

from src.core.graph import Graph
from src.utils.config import ORACLE_MAX_VERTICES, UNCOLORED
from src.utils.exceptions import TooLargeError

# (vertex, color, edge, other edge)
Violation = Tuple[int, int, int, int]


@dataclass
class ValidationReport:
    """
    Result of verify_coloring.

    Attributes:
        legal: No conflicts and no uncolored edges
        colors_used: Distinct colors on colored edges
        max_degree: d of the graph
        violations: Every (vertex, color, edge, other edge) clash
        uncolored: Edges without a color
        budget: Allowed color count, if any
        within_budget: colors_used <= budget (True without a budget)
    """
    legal: bool
    colors_used: int
    max_degree: int
    violations: List[Violation] = field(default_factory=list)
    uncolored: int = 0
    budget: Optional[int] = None
    within_budget: bool = True

    @property
    def ok(self) -> bool:
        return self.legal and self.within_budget

    def to_json(self) -> str:
        """Single-line JSON record."""
        return json.dumps(asdict(self), separators=(',', ':'))


def verify_coloring(graph: Graph, coloring: Sequence[int],
                    budget: Optional[int] = None) -> ValidationReport:
    """
    Check that no two edges sharing a vertex share a color.

    Args:
        graph: The colored graph
        coloring: One color per edge id, UNCOLORED allowed
        budget: Maximum number of colors, or None

    Returns:
        ValidationReport listing every conflict
    """
    # First edge seen with each (vertex, color)
    seen = {}
    violations: List[Violation] = []
    uncolored = 0
    used = set()
    for e, (u, v) in enumerate(graph.endpoints):
        gamma = coloring[e]
        if gamma == UNCOLORED:
            uncolored += 1
            continue
        used.add(gamma)
        for x in (u, v):
            other = seen.get((x, gamma))
            if other is not None:
                violations.append((x, gamma, other, e))
            else:
                seen[(x, gamma)] = e

    colors_used = len(used)
    within_budget = budget is None or colors_used <= budget
    return ValidationReport(
        legal=not violations and uncolored == 0,
        colors_used=colors_used,
        max_degree=graph.max_degree,
        violations=violations,
        uncolored=uncolored,
        budget=budget,
        within_budget=within_budget,
    )


def _colorable(graph: Graph, order: List[int], k: int) -> bool:
    """Backtracking search for a proper k-edge-coloring."""
    endpoints = graph.endpoints
    taken = [0] * graph.n  # bitmask of colors at each vertex
    full = (1 << k) - 1

    def place(index: int, max_used: int) -> bool:
        if index == len(order):
            return True
        u, v = endpoints[order[index]]
        free = full & ~(taken[u] | taken[v])
        # Colors above max_used + 1 are interchangeable with max_used + 1
        limit = min(k, max_used + 1)
        for gamma in range(limit):
            bit = 1 << gamma
            if not free & bit:
                continue
            taken[u] |= bit
            taken[v] |= bit
            if place(index + 1, max(max_used, gamma + 1)):
                return True
            taken[u] &= ~bit
            taken[v] &= ~bit
        return False

    return place(0, 0)


def chromatic_index_oracle(graph: Graph) -> int:
    """
    Exact chromatic index by exhaustive search.

    Edges are tried in order of decreasing endpoint degree sum, and k runs
    upward from d.

    Raises:
        TooLargeError: If the graph has more than ORACLE_MAX_VERTICES vertices
    """
    if graph.n > ORACLE_MAX_VERTICES:
        raise TooLargeError(f"Oracle is limited to {ORACLE_MAX_VERTICES} vertices, got {graph.n}")
    if graph.m == 0:
        return 0
    order = sorted(range(graph.m),
                   key=lambda e: (-(graph.degrees[graph.endpoints[e][0]]
                                    + graph.degrees[graph.endpoints[e][1]]), e))
    k = max(graph.max_degree, 1)
    while not _colorable(graph, order, k):
        k += 1
    return k
