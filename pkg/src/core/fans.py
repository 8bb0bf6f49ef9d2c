"""
Fans, fan shifts and alternating-path flips.

A c-fan (alpha, v, x0..xk) has v-x0 uncolored, alpha missing at v, and the
color of v-xi missing at x(i-1). It is primed by beta when beta is missing
at xk and either missing at v or the color of some v-xj. A u-fan
(alpha, v, {x1..xk}) has every v-xi uncolored, alpha missing at every leaf
and not missing at v.

All functions mutate a bound ColoringState and require the scope to be a
simple graph.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from src.core.coloring_state import ColoringState
from src.utils.config import UNCOLORED
from src.utils.exceptions import InvalidFanError, NotPathEndpointError


@dataclass
class PrimedCFan:
    """
    A c-fan, primed once ``beta`` is set.

    Attributes:
        alpha: Color missing at the center
        center: The vertex v
        leaves: x0..xk in order
        edges: Edge v-xi for every leaf, same order
        beta: Priming color, or None while the fan grows
        iterations: Construction loop iterations (instrumentation)
    """
    alpha: int
    center: int
    leaves: List[int]
    edges: List[int]
    beta: Optional[int] = None
    iterations: int = 0
    alive: bool = True

    kind = 'c'

    @property
    def k(self) -> int:
        return len(self.leaves) - 1

    def vertices(self) -> List[int]:
        return [self.center] + self.leaves


@dataclass
class UFan:
    """
    A u-fan: center with uncolored edges to leaves that all miss alpha.

    ``leaves`` maps each leaf to its edge; insertion order is the leaf order,
    so the lowest-index leaf is the first key.
    """
    alpha: int
    center: int
    leaves: Dict[int, int] = field(default_factory=dict)
    alive: bool = True

    kind = 'u'

    @property
    def k(self) -> int:
        return len(self.leaves)

    @property
    def degenerate(self) -> bool:
        return len(self.leaves) < 2

    def vertices(self) -> List[int]:
        return [self.center] + list(self.leaves)


@dataclass(frozen=True)
class FlipRecord:
    """Result of flipping an alternating path: far endpoint, edge count, vertices in order."""
    endpoint: int
    length: int
    visited: Tuple[int, ...]


def walk_alternating(state: ColoringState, start: int, first: int,
                     a: int, b: int) -> Tuple[List[int], List[int]]:
    """
    Follow the path alternating colors a/b from ``start``, leaving by ``first``.

    Returns:
        (vertices after start, edges) in walk order

    Raises:
        NotPathEndpointError: If the walk closes a cycle back at start
    """
    vertices: List[int] = []
    edges: List[int] = []
    search = state.dictionary.search
    endpoints = state.graph.endpoints
    x = start
    color = first
    while True:
        e = search(x, color)
        if e is None:
            return vertices, edges
        u, w = endpoints[e]
        x = w if u == x else u
        if x == start:
            raise NotPathEndpointError(f"Colors {a}/{b} form a cycle through {start}")
        vertices.append(x)
        edges.append(e)
        color = b if color == a else a


def trace_path(state: ColoringState, v: int, a: int, b: int) -> List[int]:
    """Vertex sequence of the maximal a/b path containing v, end to end."""
    forward, _ = walk_alternating(state, v, a, a, b)
    backward, _ = walk_alternating(state, v, b, a, b)
    return backward[::-1] + [v] + forward


def flip_path(state: ColoringState, v: int, alpha: int, beta: int) -> FlipRecord:
    """
    Exchange alpha and beta along the maximal alternating path starting at v.

    Args:
        state: Bound coloring state
        v: An endpoint of its alpha/beta path (misses alpha or beta)
        alpha, beta: The two colors

    Returns:
        FlipRecord with the far endpoint and path length

    Raises:
        NotPathEndpointError: If v misses neither color
    """
    missing_alpha = state.is_missing(v, alpha)
    missing_beta = state.is_missing(v, beta)
    if missing_alpha and missing_beta:
        state.stats.record_flip(0)
        return FlipRecord(v, 0, (v,))
    if not missing_alpha and not missing_beta:
        raise NotPathEndpointError(f"Vertex {v} is interior to its {alpha}/{beta} path")

    first = beta if missing_alpha else alpha
    vertices, edges = walk_alternating(state, v, first, alpha, beta)
    old = [state.colors[e] for e in edges]
    for e in edges:
        state.unset_color(e)
    for e, color in zip(edges, old):
        state.set_color(e, beta if color == alpha else alpha)

    state.stats.record_flip(len(edges))
    return FlipRecord(vertices[-1], len(edges), (v, *vertices))


def shift_cfan(state: ColoringState, fan: PrimedCFan, j: int):
    """
    Shift the fan from leaf j: v-x(i-1) takes the old color of v-xi for i = 1..j,
    leaving v-xj uncolored.

    Raises:
        InvalidFanError: If j is out of range or v-x0 is colored
    """
    if not 0 <= j <= fan.k:
        raise InvalidFanError(f"Shift index {j} outside 0..{fan.k}")
    if j == 0:
        return
    edges = fan.edges
    if state.colors[edges[0]] != UNCOLORED:
        raise InvalidFanError(f"Fan edge {edges[0]} to x0 is colored")
    moved = [state.colors[edges[i]] for i in range(1, j + 1)]
    for i in range(1, j + 1):
        state.unset_color(edges[i])
    for i in range(1, j + 1):
        state.set_color(edges[i - 1], moved[i - 1])


def _find_edge(state: ColoringState, v: int, x: int) -> int:
    for e, y in state.incident(v):
        if y == x:
            return e
    raise InvalidFanError(f"No scoped edge between {v} and {x}")


def make_primed_fan(state: ColoringState, v: int, x0: int, alpha: int,
                    edge: Optional[int] = None) -> PrimedCFan:
    """
    Grow a c-fan from uncolored edge v-x0 until it can be primed.

    Args:
        state: Bound coloring state over a simple scope
        v: Fan center
        x0: Far end of the uncolored edge
        alpha: A color missing at v
        edge: The edge v-x0 if known

    Returns:
        A primed c-fan
    """
    if edge is None:
        edge = _find_edge(state, v, x0)
    fan = PrimedCFan(alpha, v, [x0], [edge])
    stamp = state.next_stamp()
    state.mark(x0, stamp)

    while True:
        fan.iterations += 1
        beta = state.pick_missing(fan.leaves[-1])
        if state.is_missing(v, beta):
            fan.beta = beta
            break
        e = state.edge_with_color(v, beta)
        x = state.other(e, v)
        if state.is_marked(x, stamp):
            fan.beta = beta
            break
        state.mark(x, stamp)
        fan.leaves.append(x)
        fan.edges.append(e)

    state.stats.record_fan(fan.iterations, state.scope_degree(v))
    return fan


def activate_c_fan(state: ColoringState, fan: PrimedCFan) -> FlipRecord:
    """
    Color edge v-x0 of a primed c-fan, flipping at most one alpha/beta path at v.

    Returns:
        The flip record (length 0 when beta was missing at v)

    Raises:
        InvalidFanError: If the fan is not primed
    """
    if fan.beta is None:
        raise InvalidFanError("Fan is not primed")
    v, alpha, beta = fan.center, fan.alpha, fan.beta
    k = fan.k

    if state.is_missing(v, beta):
        shift_cfan(state, fan, k)
        state.set_color(fan.edges[k], beta)
        state.stats.record_flip(0)
        return FlipRecord(v, 0, (v,))

    x_j = state.other(state.edge_with_color(v, beta), v)
    try:
        j = fan.leaves.index(x_j)
    except ValueError:
        raise InvalidFanError(f"Beta {beta} at {v} does not lead to a fan leaf")
    if j == 0:
        raise InvalidFanError("Edge to x0 is colored")

    record = flip_path(state, v, alpha, beta)
    if record.endpoint != fan.leaves[j - 1]:
        target = j - 1
    else:
        target = k
    shift_cfan(state, fan, target)
    state.set_color(fan.edges[target], beta)
    return record


def activate_u_fan(state: ColoringState, fan: UFan, beta: int,
                   on_remove: Optional[Callable[[int], None]] = None) -> FlipRecord:
    """
    Flip the alpha/beta path at the center, then color one leaf edge by alpha.

    The flipped path's endpoint is dropped from the leaves if it was one;
    the colored leaf is the lowest-index remaining one and is dropped too.

    Args:
        state: Bound coloring state
        fan: u-fan with at least two leaves and beta missing at its center
        beta: The stage color
        on_remove: Called with every leaf dropped from the fan

    Raises:
        InvalidFanError: If the fan has fewer than two leaves
    """
    if fan.k < 2:
        raise InvalidFanError(f"u-fan at {fan.center} has {fan.k} leaf")
    v, alpha = fan.center, fan.alpha
    record = flip_path(state, v, alpha, beta)
    if record.endpoint in fan.leaves:
        del fan.leaves[record.endpoint]
        if on_remove is not None:
            on_remove(record.endpoint)
    x = next(iter(fan.leaves))
    e = fan.leaves.pop(x)
    if on_remove is not None:
        on_remove(x)
    state.set_color(e, alpha)
    return record


# === Validity checks ===

def cfan_problems(state: ColoringState, fan: PrimedCFan) -> List[str]:
    """Ways in which a c-fan violates its definition against the state."""
    problems = []
    v = fan.center
    colors = state.colors
    if not state.is_missing(v, fan.alpha):
        problems.append(f"alpha {fan.alpha} not missing at center {v}")
    if len(set(fan.leaves)) != len(fan.leaves):
        problems.append("leaves are not distinct")
    for i, (x, e) in enumerate(zip(fan.leaves, fan.edges)):
        if state.other(e, v) != x:
            problems.append(f"edge {e} does not join {v} and {x}")
        if i == 0:
            if colors[e] != UNCOLORED:
                problems.append(f"edge {e} to x0 is colored")
        elif colors[e] == UNCOLORED:
            problems.append(f"edge {e} to x{i} is uncolored")
        elif not state.is_missing(fan.leaves[i - 1], colors[e]):
            problems.append(f"color {colors[e]} of v-x{i} is not missing at x{i - 1}")
    if fan.beta is not None:
        beta = fan.beta
        if not state.is_missing(fan.leaves[-1], beta):
            problems.append(f"beta {beta} not missing at last leaf")
        if not state.is_missing(v, beta) and beta not in (colors[e] for e in fan.edges[1:]):
            problems.append(f"beta {beta} neither missing at center nor on a fan edge")
    return problems


def ufan_problems(state: ColoringState, fan: UFan) -> List[str]:
    """Ways in which a u-fan violates its definition against the state."""
    problems = []
    v = fan.center
    if state.is_missing(v, fan.alpha):
        problems.append(f"alpha {fan.alpha} missing at center {v}")
    for x, e in fan.leaves.items():
        if state.other(e, v) != x:
            problems.append(f"edge {e} does not join {v} and {x}")
        if state.colors[e] != UNCOLORED:
            problems.append(f"edge {e} to leaf {x} is colored")
        if not state.is_missing(x, fan.alpha):
            problems.append(f"alpha {fan.alpha} not missing at leaf {x}")
    return problems


def check_fan(state: ColoringState, fan) -> None:
    """Raise InvalidFanError if the fan is not valid against the state."""
    problems = cfan_problems(state, fan) if fan.kind == 'c' else ufan_problems(state, fan)
    if problems:
        raise InvalidFanError("; ".join(problems))
