"""
Single-edge repair routines: Greedy-Color, Color-One and Random-Color-One.
"""

import random

from src.core.coloring_state import ColoringState
from src.core.fans import FlipRecord, activate_c_fan, make_primed_fan
from src.utils.exceptions import ColoringStateError


def greedy_color(state: ColoringState, e: int) -> int:
    """
    Color edge e with the smallest color missing at both endpoints.

    With a palette of 2d - 1 such a color always exists.

    Returns:
        The color used

    Raises:
        ColoringStateError: If every palette color is taken at an endpoint
    """
    u, v = state.graph.endpoints[e]
    search = state.dictionary.search
    for gamma in range(1, state.palette + 1):
        if search(u, gamma) is None and search(v, gamma) is None:
            state.set_color(e, gamma)
            state.stats.greedy_calls += 1
            return gamma
    raise ColoringStateError(f"No color in 1..{state.palette} is free at both ends of edge {e}")


def _color_edge_at(state: ColoringState, e: int, v: int, alpha: int) -> FlipRecord:
    x0 = state.other(e, v)
    fan = make_primed_fan(state, v, x0, alpha, e)
    state.stats.color_one_calls += 1
    return activate_c_fan(state, fan)


def color_one(state: ColoringState) -> FlipRecord:
    """
    Color the uncolored edge at the front of the pool with a Vizing fan.

    The fan center is the edge's first endpoint and alpha is the head of
    its missing-color list.

    Raises:
        NoUncoloredEdgesError: If every scoped edge is colored
    """
    e = state.first_uncolored()
    v = state.graph.endpoints[e][0]
    return _color_edge_at(state, e, v, state.pick_missing(v))


def random_color_one(state: ColoringState, rng: random.Random) -> FlipRecord:
    """
    Color a uniformly random uncolored edge from a random endpoint with a random missing color.

    Args:
        state: Bound coloring state over a simple scope
        rng: The run's seeded generator

    Raises:
        NoUncoloredEdgesError: If every scoped edge is colored
    """
    e = state.sample_uncolored(rng)
    v = state.graph.endpoints[e][rng.randrange(2)]
    alpha = rng.choice(state.missing_colors(v))
    return _color_edge_at(state, e, v, alpha)
