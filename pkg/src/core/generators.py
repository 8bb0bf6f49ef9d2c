"""
Seeded graph generators for the CLI, the benchmark and the tests.

Every family returns ``(n, edges)`` with vertices 0..n-1 and no isolated
vertex; random families re-draw until that holds. Equal arguments always
give an equal edge list.
"""

from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from src.core.graph import Graph, build_graph
from src.utils.config import (
    FAMILY_BIPARTITE,
    FAMILY_COMPLETE,
    FAMILY_CYCLE,
    FAMILY_GNM,
    FAMILY_MULTIGRAPH,
    FAMILY_PATH,
    FAMILY_REGULAR,
    FAMILY_STAR,
    GENERATOR_FAMILIES,
    MAX_RESAMPLE_ATTEMPTS,
)
from src.utils.exceptions import InvalidParamsError

EdgeList = List[Tuple[int, int]]


def _edges_of(g: nx.Graph) -> EdgeList:
    return [(int(u), int(v)) for u, v in g.edges()]


def _degrees(n: int, edges: EdgeList) -> np.ndarray:
    if not edges:
        return np.zeros(n, dtype=np.int64)
    return np.bincount(np.asarray(edges, dtype=np.int64).ravel(), minlength=n)


def _cover_isolated(n: int, edges: EdgeList, rng: np.random.Generator, family: str) -> EdgeList:
    """
    Re-sample edges until no vertex is isolated.

    Each isolated vertex v takes over a random edge whose endpoints both
    keep another edge; that edge is re-drawn as v-w for a random w != v.
    The edge count is unchanged and v-w is new, so simple graphs stay simple.
    """
    degree = _degrees(n, edges)
    isolated = np.flatnonzero(degree == 0)
    if not isolated.size:
        return edges
    if not edges:
        raise InvalidParamsError(f"{family}: no edges to cover {n} vertices")
    edges = list(edges)
    for v in isolated.tolist():
        if degree[v]:
            continue
        for _ in range(MAX_RESAMPLE_ATTEMPTS):
            i = int(rng.integers(len(edges)))
            a, b = edges[i]
            if degree[a] < 2 or degree[b] < 2:
                continue
            w = int(rng.integers(n - 1))
            w += w >= v
            edges[i] = (min(v, w), max(v, w))
            degree[[a, b]] -= 1
            degree[[v, w]] += 1
            break
        else:
            raise InvalidParamsError(
                f"{family}: could not cover isolated vertex {v} in {MAX_RESAMPLE_ATTEMPTS} "
                f"re-samples (n={n}, m={len(edges)}); raise the edge count")
    return edges


def _resample(n: int, seed: int, draw: Callable[[int], EdgeList], family: str) -> EdgeList:
    """Draw once with a sub-seed of ``seed``, then re-sample edges onto isolated vertices."""
    rng = np.random.default_rng(seed)
    edges = draw(int(rng.integers(2 ** 31)))
    return _cover_isolated(n, edges, rng, family)


def _gnm(n: int, m: int, seed: int) -> EdgeList:
    if n < 2:
        raise InvalidParamsError("gnm needs n >= 2")
    if not (n + 1) // 2 <= m <= n * (n - 1) // 2:
        raise InvalidParamsError(f"gnm needs ceil(n/2) <= m <= n(n-1)/2, got m={m}")
    return _resample(n, seed, lambda s: _edges_of(nx.gnm_random_graph(n, m, seed=s)), FAMILY_GNM)


def _multigraph(n: int, m: int, seed: int) -> EdgeList:
    if n < 2:
        raise InvalidParamsError("random-multigraph needs n >= 2")
    if m < (n + 1) // 2:
        raise InvalidParamsError(f"random-multigraph needs m >= ceil(n/2), got m={m}")

    def draw(s: int) -> EdgeList:
        rng = np.random.default_rng(s)
        u = rng.integers(0, n, size=m)
        # Shift by 1..n-1 so no pair is a self-loop
        v = (u + rng.integers(1, n, size=m)) % n
        return list(zip(u.tolist(), v.tolist()))

    return _resample(n, seed, draw, FAMILY_MULTIGRAPH)


def _regular_ish(n: int, degree: int, seed: int) -> EdgeList:
    if not 1 <= degree < n:
        raise InvalidParamsError(f"random-regular-ish needs 1 <= degree < n, got {degree}")
    sequence = [degree] * n
    if (n * degree) % 2:
        sequence[-1] -= 1

    def draw(s: int) -> EdgeList:
        g = nx.Graph(nx.configuration_model(sequence, seed=s))
        g.remove_edges_from(list(nx.selfloop_edges(g)))
        return sorted((min(u, v), max(u, v)) for u, v in g.edges())

    return _resample(n, seed, draw, FAMILY_REGULAR)


def _deterministic(family: str, n: int) -> EdgeList:
    if family == FAMILY_COMPLETE:
        if n < 2:
            raise InvalidParamsError("complete needs n >= 2")
        return _edges_of(nx.complete_graph(n))
    if family == FAMILY_STAR:
        if n < 2:
            raise InvalidParamsError("star needs n >= 2")
        return _edges_of(nx.star_graph(n - 1))
    if family == FAMILY_CYCLE:
        if n < 3:
            raise InvalidParamsError("cycle needs n >= 3")
        return _edges_of(nx.cycle_graph(n))
    if family == FAMILY_PATH:
        if n < 2:
            raise InvalidParamsError("path needs n >= 2")
        return _edges_of(nx.path_graph(n))
    if family == FAMILY_BIPARTITE:
        if n < 2:
            raise InvalidParamsError("bipartite-complete needs n >= 2")
        return _edges_of(nx.complete_bipartite_graph(n // 2, n - n // 2))
    raise InvalidParamsError(f"Unknown family {family!r}")


def generate(family: str, n: int, m: Optional[int] = None, degree: Optional[int] = None,
             seed: int = 0) -> Tuple[int, EdgeList]:
    """
    Generate a graph of a named family.

    Args:
        family: One of GENERATOR_FAMILIES
        n: Vertex count
        m: Edge count for gnm-random-simple and random-multigraph (default 4n, capped for gnm)
        degree: Target degree for random-regular-ish (default 4, capped at n - 1)
        seed: Seed of the random families

    Returns:
        (n, edges)

    Raises:
        InvalidParamsError: On an unknown family or impossible parameters
    """
    if family not in GENERATOR_FAMILIES:
        raise InvalidParamsError(f"Unknown family {family!r}; choose from {', '.join(GENERATOR_FAMILIES)}")
    if n < 1:
        raise InvalidParamsError(f"n must be positive, got {n}")

    if family == FAMILY_GNM:
        edges = _gnm(n, m if m is not None else min(4 * n, n * (n - 1) // 2), seed)
    elif family == FAMILY_MULTIGRAPH:
        edges = _multigraph(n, m if m is not None else 4 * n, seed)
    elif family == FAMILY_REGULAR:
        edges = _regular_ish(n, degree if degree is not None else min(4, n - 1), seed)
    else:
        edges = _deterministic(family, n)
    return n, edges


def generate_graph(family: str, n: int, m: Optional[int] = None, degree: Optional[int] = None,
                   seed: int = 0) -> Graph:
    """generate() followed by build_graph()."""
    n, edges = generate(family, n, m, degree, seed)
    return build_graph(n, edges)


FAMILY_PARAMETERS: Dict[str, str] = {
    FAMILY_GNM: "n, m",
    FAMILY_MULTIGRAPH: "n, m",
    FAMILY_COMPLETE: "n",
    FAMILY_STAR: "n (one center, n - 1 leaves)",
    FAMILY_CYCLE: "n",
    FAMILY_PATH: "n",
    FAMILY_BIPARTITE: "n (parts n // 2 and n - n // 2)",
    FAMILY_REGULAR: "n, degree",
}
