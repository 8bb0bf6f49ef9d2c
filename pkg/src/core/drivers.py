"""
Recursive edge-coloring drivers.

Every driver follows the same template: split the edges into two halves of
about half the degree with an Euler partition, color both halves
recursively with disjoint color ranges, prune the least used colors until
the palette fits the node's degree, and repair the edges the prune left
uncolored. The drivers differ only in palette size and repair routine:

* greedy: 2d - 1 colors, Greedy-Color per uncolored edge (multigraphs allowed)
* euler: d + 1 colors, Color-Many while l >= 2md/n, then Color-One
* random-euler: d + 1 colors, Random-Color-One from a seeded generator

The recursion runs over an explicit stack. All nodes share one
ColoringState; each repair binds the node's scope and unbinds it afterwards.
"""

import random
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from src.core.color_many import color_many
from src.core.coloring_state import ColoringState
from src.core.euler_partition import euler_partition
from src.core.graph import Graph, scope_max_degree
from src.core.repair import color_one, greedy_color, random_color_one
from src.utils.config import (
    ALGO_EULER,
    ALGO_GREEDY,
    ALGO_GREEDY_DIRECT,
    ALGO_RANDOM_EULER,
    ALGO_VIZING,
    BACKEND_TWO_LEVEL,
    UNCOLORED,
    palette_budget,
)
from src.utils.exceptions import InvalidParamsError
from src.utils.logging_config import debug_enabled, log_debug, log_info, log_warning
from src.utils.performance_monitor import PruneRecord, RunStats, Stopwatch


@dataclass
class RecursionNode:
    """
    One subgraph of the recursion tree.

    Attributes:
        scope: Edge ids, in increasing order
        d_node: Max degree within the scope
        m_node: Number of edges
        palette: Colors granted to the node, #c(d_node)
        depth: Distance from the root
    """
    scope: List[int]
    d_node: int
    m_node: int
    palette: int
    depth: int = 0
    children: List['RecursionNode'] = field(default_factory=list)

    @property
    def is_base(self) -> bool:
        return self.d_node <= 1 or self.m_node <= 1


@dataclass
class ColoringResult:
    """Output of one driver run."""
    algorithm: str
    colors: List[int]
    num_colors: int
    stats: RunStats
    elapsed: float = 0.0


RepairHook = Callable[[ColoringState, RecursionNode], None]


def prune(state: ColoringState, scope: List[int], target: int, d_node: int = 0) -> int:
    """
    Uncolor the least used colors of an unbound scope until at most ``target`` remain.

    Ties in frequency remove the higher color first. Survivors are renumbered
    onto 1..target in their original order.

    Returns:
        t, the number of color classes removed
    """
    colors = state.colors
    values = np.asarray([colors[e] for e in scope], dtype=np.int64)
    counts = np.bincount(values, minlength=2)
    used = np.flatnonzero(counts[1:]) + 1
    t = max(0, len(used) - target)

    removed = np.empty(0, dtype=np.int64)
    if t:
        # Primary key frequency, secondary key higher color first
        order = np.lexsort((-used, counts[used]))
        removed = used[order[:t]]

    mapping = np.zeros(len(counts), dtype=np.int64)
    survivors = np.setdiff1d(used, removed)
    mapping[survivors] = np.arange(1, len(survivors) + 1)
    relabeled = mapping[values]
    for e, gamma in zip(scope, relabeled.tolist()):
        colors[e] = gamma

    uncolored = int(counts[removed].sum()) if t else 0
    state.stats.prunes.append(PruneRecord(len(scope), d_node, target, t, uncolored))
    return t


class _TemplateRun:
    """One recursive coloring of a graph."""

    def __init__(self, graph: Graph, algorithm: str, seed: Optional[int],
                 backend: str, debug: bool, on_repair: Optional[RepairHook]):
        self.graph = graph
        self.algorithm = algorithm
        self.rng = random.Random(seed)
        self.on_repair = on_repair
        self.debug = debug
        self.state = ColoringState(graph, palette_budget(algorithm, graph.max_degree),
                                   backend=backend, debug=debug)

    def make_node(self, scope: List[int], depth: int) -> RecursionNode:
        d_node = scope_max_degree(self.graph, scope)
        return RecursionNode(scope, d_node, len(scope), palette_budget(self.algorithm, d_node), depth)

    def run(self):
        """Color every edge of the graph."""
        colors = self.state.colors
        root = self.make_node(list(range(self.graph.m)), 0)
        stack = [(root, False)]
        while stack:
            node, expanded = stack.pop()
            if node.is_base:
                for e in node.scope:
                    colors[e] = 1
                continue
            if not expanded:
                partition = euler_partition(self.graph, node.scope)
                self.state.stats.partitions.append(partition.record)
                node.children = [self.make_node(partition.left, node.depth + 1),
                                 self.make_node(partition.right, node.depth + 1)]
                stack.append((node, True))
                stack.append((node.children[1], False))
                stack.append((node.children[0], False))
                continue
            self.combine(node)
            node.children = []

    def combine(self, node: RecursionNode):
        """Join the children's colorings, prune and repair."""
        colors = self.state.colors
        left, right = node.children
        offset = max(colors[e] for e in left.scope)
        for e in right.scope:
            colors[e] += offset

        t = prune(self.state, node.scope, node.palette, node.d_node)
        state = self.state
        state.bind_scope(node.scope, node.palette)
        state.stats.repair_nodes += 1
        if debug_enabled():
            log_debug(f"node depth={node.depth} m={node.m_node} d={node.d_node} "
                      f"palette={node.palette} t={t} l={state.ell}")
        if self.on_repair is not None:
            self.on_repair(state, node)
        self.repair(node)
        if self.debug:
            state.check()
        state.unbind_scope()

    def repair(self, node: RecursionNode):
        state = self.state
        if self.algorithm == ALGO_GREEDY:
            for e in list(state.uncolored_edges()):
                greedy_color(state, e)
        elif self.algorithm == ALGO_EULER:
            threshold = 2 * node.m_node * node.d_node
            n_top = self.graph.n
            while state.ell > 0 and state.ell * n_top >= threshold:
                if color_many(state) == 0:
                    log_warning(f"color_many made no progress at l={state.ell}")
                    break
            while state.ell > 0:
                color_one(state)
        else:
            while state.ell > 0:
                random_color_one(state, self.rng)


def _result(algorithm: str, state: ColoringState, watch: Stopwatch) -> ColoringResult:
    colors = list(state.colors)
    num_colors = len({gamma for gamma in colors if gamma != UNCOLORED})
    graph = state.graph
    log_info(f"{algorithm}: n={graph.n} m={graph.m} d={graph.max_degree} "
             f"colors={num_colors} time={watch.elapsed:.3f}s")
    return ColoringResult(algorithm, colors, num_colors, state.stats, watch.elapsed)


def _run_recursive(graph: Graph, algorithm: str, seed: Optional[int] = None,
                   backend: str = BACKEND_TWO_LEVEL, debug: bool = False,
                   on_repair: Optional[RepairHook] = None) -> ColoringResult:
    if algorithm != ALGO_GREEDY:
        graph.require_simple()
    with Stopwatch() as watch:
        run = _TemplateRun(graph, algorithm, seed, backend, debug, on_repair)
        run.run()
    return _result(algorithm, run.state, watch)


def greedy_euler_color(graph: Graph, backend: str = BACKEND_TWO_LEVEL, debug: bool = False,
                       on_repair: Optional[RepairHook] = None) -> ColoringResult:
    """
    Color a multigraph with at most max(1, 2d - 1) colors.

    Args:
        graph: Any loopless multigraph
        backend: Pair dictionary backend
        debug: Audit the state after every repair
        on_repair: Called after each prune, before the repair

    Returns:
        ColoringResult with colors 1..2d-1
    """
    return _run_recursive(graph, ALGO_GREEDY, None, backend, debug, on_repair)


def euler_color(graph: Graph, backend: str = BACKEND_TWO_LEVEL, debug: bool = False,
                on_repair: Optional[RepairHook] = None) -> ColoringResult:
    """
    Color a simple graph with at most d + 1 colors, deterministically.

    Raises:
        NotSimpleError: If the graph has parallel edges
    """
    return _run_recursive(graph, ALGO_EULER, None, backend, debug, on_repair)


def random_euler_color(graph: Graph, seed: int = 0, backend: str = BACKEND_TWO_LEVEL,
                       debug: bool = False,
                       on_repair: Optional[RepairHook] = None) -> ColoringResult:
    """
    Color a simple graph with at most d + 1 colors using seeded random repairs.

    The partition stays deterministic; only Random-Color-One draws from the
    generator, so equal (graph, seed) pairs give equal colorings.

    Raises:
        NotSimpleError: If the graph has parallel edges
    """
    return _run_recursive(graph, ALGO_RANDOM_EULER, seed, backend, debug, on_repair)


def greedy_color_all(graph: Graph, backend: str = BACKEND_TWO_LEVEL,
                     debug: bool = False) -> ColoringResult:
    """Greedy-Color every edge of the whole multigraph with 2d - 1 colors, no recursion."""
    with Stopwatch() as watch:
        palette = palette_budget(ALGO_GREEDY_DIRECT, graph.max_degree)
        state = ColoringState(graph, palette, backend=backend, debug=debug)
        state.bind_scope(range(graph.m), palette)
        for e in range(graph.m):
            greedy_color(state, e)
        state.unbind_scope()
    return _result(ALGO_GREEDY_DIRECT, state, watch)


def vizing_color(graph: Graph, backend: str = BACKEND_TWO_LEVEL,
                 debug: bool = False) -> ColoringResult:
    """
    Color-One every edge of the whole simple graph with d + 1 colors, no recursion.

    Raises:
        NotSimpleError: If the graph has parallel edges
    """
    graph.require_simple()
    with Stopwatch() as watch:
        palette = palette_budget(ALGO_VIZING, graph.max_degree)
        state = ColoringState(graph, palette, backend=backend, debug=debug)
        state.bind_scope(range(graph.m), palette)
        while state.ell > 0:
            color_one(state)
        if debug:
            state.check()
        state.unbind_scope()
    return _result(ALGO_VIZING, state, watch)


def color_graph(graph: Graph, algorithm: str, seed: int = 0,
                backend: str = BACKEND_TWO_LEVEL, debug: bool = False) -> ColoringResult:
    """
    Run a driver by name.

    Raises:
        InvalidParamsError: If the algorithm name is unknown
        NotSimpleError: If the algorithm needs a simple graph
    """
    if algorithm == ALGO_GREEDY:
        return greedy_euler_color(graph, backend, debug)
    if algorithm == ALGO_EULER:
        return euler_color(graph, backend, debug)
    if algorithm == ALGO_RANDOM_EULER:
        return random_euler_color(graph, seed, backend, debug)
    if algorithm == ALGO_GREEDY_DIRECT:
        return greedy_color_all(graph, backend, debug)
    if algorithm == ALGO_VIZING:
        return vizing_color(graph, backend, debug)
    raise InvalidParamsError(f"Unknown algorithm {algorithm!r}")
