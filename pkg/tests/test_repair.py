"""
Tests for the Euler partition, fans, alternating paths and single-edge repairs.
"""

import random
import sys
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))


def _side_degrees(graph, edges):
    from src.core.graph import scope_degrees
    return scope_degrees(graph, edges)


def _bound_state(graph, colors=None, palette=None):
    from src.core.coloring_state import ColoringState

    state = ColoringState(graph, colors=colors)
    state.bind_scope(range(graph.m), palette or graph.max_degree + 1)
    return state


@st.composite
def simple_graphs(draw, max_n=14):
    """Random simple graphs without isolated vertices, as Graph objects."""
    from src.core.graph import graph_from_networkx

    n = draw(st.integers(2, max_n))
    m = draw(st.integers(1, n * (n - 1) // 2))
    seed = draw(st.integers(0, 10_000))
    g = nx.gnm_random_graph(n, m, seed=seed)
    g.remove_nodes_from([x for x in list(g.nodes()) if g.degree(x) == 0])
    return graph_from_networkx(g)


@st.composite
def multigraphs(draw, max_n=8, max_m=30):
    """Random loopless multigraphs without isolated vertices, as Graph objects."""
    from src.core.graph import build_graph

    n = draw(st.integers(2, max_n))
    steps = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(1, n - 1)),
                          min_size=1, max_size=max_m))
    pairs = [(u, (u + step) % n) for u, step in steps]
    used = sorted({x for pair in pairs for x in pair})
    index = {x: i for i, x in enumerate(used)}
    return build_graph(len(used), [(index[u], index[v]) for u, v in pairs])


class TestEulerPartition:
    """Tests for euler_partition."""

    def test_cycle_splits_evenly(self, cycle4):
        """Test that C4 splits into two matchings of two edges."""
        from src.core.euler_partition import euler_partition

        part = euler_partition(cycle4, range(4))
        assert sorted(part.left + part.right) == [0, 1, 2, 3]
        assert len(part.left) == len(part.right) == 2
        for side in (part.left, part.right):
            assert max(_side_degrees(cycle4, side).values()) == 1
        assert part.record.holds()

    def test_path_alternates(self, path4):
        """Test that P4 gives the outer edges to one side."""
        from src.core.euler_partition import euler_partition

        part = euler_partition(path4, range(3))
        assert part.left == [0, 2]
        assert part.right == [1]
        assert part.record.odd_closed_tours == 0

    def test_triangle_needs_one_extra(self, triangle):
        """Test that K3 forces one vertex to take two edges on a side."""
        from src.core.euler_partition import euler_partition

        part = euler_partition(triangle, range(3))
        assert sorted((len(part.left), len(part.right))) == [1, 2]
        assert part.record.odd_closed_tours == 1
        assert part.record.max_excess == 1
        assert part.record.holds()

    def test_halves_keep_scope_order(self, petersen):
        """Test that both halves list edges in the scope's order."""
        from src.core.euler_partition import euler_partition

        part = euler_partition(petersen, range(15))
        assert part.left == sorted(part.left)
        assert part.right == sorted(part.right)

    def test_empty_scope(self, triangle):
        """Test that an empty scope raises ValueError."""
        from src.core.euler_partition import euler_partition

        with pytest.raises(ValueError):
            euler_partition(triangle, [])

    @settings(max_examples=60, deadline=None)
    @given(simple_graphs())
    def test_sizes_and_cover(self, graph):
        """Test that halves are disjoint, cover the scope and differ by at most one edge."""
        from src.core.euler_partition import euler_partition

        part = euler_partition(graph, range(graph.m))
        assert sorted(part.left + part.right) == list(range(graph.m))
        assert {len(part.left), len(part.right)} <= {graph.m // 2, (graph.m + 1) // 2}

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 7), st.integers(1, 7), st.integers(0, 10_000))
    def test_bipartite_degrees_halve(self, a, b, seed):
        """Test that bipartite graphs (no odd tours) give every vertex at most ceil(deg/2) per side."""
        from src.core.euler_partition import euler_partition
        from src.core.graph import graph_from_networkx

        g = nx.bipartite.gnmk_random_graph(a, b, max(1, (a * b) // 2), seed=seed)
        g.remove_nodes_from([x for x in list(g.nodes()) if g.degree(x) == 0])
        graph = graph_from_networkx(g)
        part = euler_partition(graph, range(graph.m))
        for side in (part.left, part.right):
            for v, degree in _side_degrees(graph, side).items():
                assert degree <= (graph.degree(v) + 1) // 2
        assert part.record.odd_closed_tours == 0

    @settings(max_examples=80, deadline=None)
    @given(st.one_of(simple_graphs(), multigraphs()))
    def test_odd_tours_bound_side_degrees(self, graph):
        """Test that on any (multi)graph no side exceeds ceil(deg/2) + 1 and each excess vertex has its own odd closed tour."""
        from src.core.euler_partition import euler_partition

        part = euler_partition(graph, range(graph.m))
        for side in (part.left, part.right):
            for v, degree in _side_degrees(graph, side).items():
                assert degree <= (graph.degree(v) + 1) // 2 + 1
        assert part.record.excess_vertices <= part.record.odd_closed_tours
        assert part.record.holds()

    def test_parallel_triangle(self):
        """Test that a doubled triangle splits with at most one extra edge per vertex."""
        from src.core.euler_partition import euler_partition
        from src.core.graph import build_graph

        graph = build_graph(3, [(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)])
        part = euler_partition(graph, range(6))
        assert len(part.left) == len(part.right) == 3
        for side in (part.left, part.right):
            assert max(_side_degrees(graph, side).values()) <= 3
        assert part.record.holds()


class TestAlternatingPaths:
    """Tests for walk_alternating, trace_path and flip_path."""

    def test_flip_open_path(self, path4):
        """Test that flipping 1/2 from an end swaps every color on the path."""
        from src.core.fans import flip_path

        state = _bound_state(path4, colors=[1, 2, 1], palette=3)
        record = flip_path(state, 0, 1, 2)
        assert record.endpoint == 3
        assert record.length == 3
        assert record.visited == (0, 1, 2, 3)
        assert state.colors == [2, 1, 2]
        assert state.audit() == []
        assert state.stats.flip_total == 3

    def test_flip_from_interior_vertex(self, path4):
        """Test that an interior vertex raises NotPathEndpointError."""
        from src.core.fans import flip_path
        from src.utils.exceptions import NotPathEndpointError

        state = _bound_state(path4, colors=[1, 2, 1], palette=3)
        with pytest.raises(NotPathEndpointError):
            flip_path(state, 1, 1, 2)

    def test_flip_where_both_missing(self, path4):
        """Test that a vertex missing both colors gives a zero-length flip."""
        from src.core.fans import flip_path

        state = _bound_state(path4, colors=[1, 2, 1], palette=3)
        record = flip_path(state, 0, 2, 3)
        assert record.length == 0
        assert state.colors == [1, 2, 1]

    def test_trace_path_end_to_end(self, path4):
        """Test that trace_path returns the whole path whatever vertex it starts from."""
        from src.core.fans import trace_path

        state = _bound_state(path4, colors=[1, 2, 1], palette=3)
        path = trace_path(state, 2, 1, 2)
        assert path in ([0, 1, 2, 3], [3, 2, 1, 0])

    def test_alternating_cycle(self, cycle4):
        """Test that a two-colored cycle raises NotPathEndpointError."""
        from src.core.fans import trace_path
        from src.utils.exceptions import NotPathEndpointError

        state = _bound_state(cycle4, colors=[1, 2, 1, 2], palette=3)
        with pytest.raises(NotPathEndpointError):
            trace_path(state, 0, 1, 2)

    @settings(max_examples=60, deadline=None)
    @given(simple_graphs(max_n=12), st.integers(0, 10_000))
    def test_flip_twice_restores_colors(self, graph, seed):
        """Test that flipping the same path twice from the same vertex restores the coloring."""
        from src.core.fans import flip_path
        from src.core.repair import random_color_one

        state = _bound_state(graph)
        rng = random.Random(seed)
        for _ in range(rng.randrange(graph.m + 1)):
            random_color_one(state, rng)
        v = rng.randrange(graph.n)
        a = state.pick_missing(v)
        b = rng.choice([c for c in range(1, state.palette + 1) if c != a])
        before = list(state.colors)
        first = flip_path(state, v, a, b)
        second = flip_path(state, v, a, b)
        assert state.colors == before
        assert (second.endpoint, second.length) == (first.endpoint, first.length)
        assert state.audit() == []


class TestFans:
    """Tests for c-fans and u-fans."""

    def test_primed_fan_on_triangle(self, triangle):
        """Test fan growth when v-x0 is uncolored and the other triangle edges are 1 and 2."""
        from src.core.fans import cfan_problems, make_primed_fan

        state = _bound_state(triangle, colors=[0, 1, 2], palette=3)
        fan = make_primed_fan(state, 0, 1, 1)
        assert fan.leaves == [1, 2]
        assert fan.edges == [0, 2]
        assert fan.beta == 3
        assert cfan_problems(state, fan) == []

    def test_activate_c_fan_shifts(self, triangle):
        """Test that activating a fan whose beta is free at v shifts and colors the last edge."""
        from src.core.fans import activate_c_fan, make_primed_fan

        state = _bound_state(triangle, colors=[0, 1, 2], palette=3)
        fan = make_primed_fan(state, 0, 1, 1)
        record = activate_c_fan(state, fan)
        assert record.length == 0
        assert state.colors == [2, 1, 3]
        assert state.ell == 0
        assert state.audit() == []

    def test_activate_c_fan_path_ends_at_previous_leaf(self):
        """Test that when the flipped path ends at x(j-1) the whole fan shifts and v-xk takes beta."""
        from src.core.fans import PrimedCFan, activate_c_fan, cfan_problems
        from src.core.graph import build_graph

        graph = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
        state = _bound_state(graph, colors=[0, 2, 3, 1], palette=4)
        fan = PrimedCFan(1, 0, [1, 2, 3], [0, 1, 2], beta=2)
        assert cfan_problems(state, fan) == []
        record = activate_c_fan(state, fan)
        assert record.endpoint == 1
        assert record.length == 2
        assert state.colors == [1, 3, 2, 2]
        assert state.ell == 0
        assert state.audit() == []

    def test_unprimed_fan_cannot_activate(self, triangle):
        """Test that an unprimed fan raises InvalidFanError."""
        from src.core.fans import PrimedCFan, activate_c_fan
        from src.utils.exceptions import InvalidFanError

        state = _bound_state(triangle, colors=[0, 1, 2], palette=3)
        with pytest.raises(InvalidFanError):
            activate_c_fan(state, PrimedCFan(1, 0, [1], [0]))

    def test_shift_index_out_of_range(self, triangle):
        """Test that shifting past the last leaf raises InvalidFanError."""
        from src.core.fans import make_primed_fan, shift_cfan
        from src.utils.exceptions import InvalidFanError

        state = _bound_state(triangle, colors=[0, 1, 2], palette=3)
        fan = make_primed_fan(state, 0, 1, 1)
        with pytest.raises(InvalidFanError):
            shift_cfan(state, fan, 5)

    def test_activate_u_fan(self):
        """Test that a u-fan flips at its center and colors its first leaf by alpha."""
        from src.core.fans import UFan, activate_u_fan, ufan_problems
        from src.core.graph import build_graph

        graph = build_graph(4, [(0, 1), (0, 2), (0, 3)])
        state = _bound_state(graph, colors=[0, 0, 1], palette=4)
        fan = UFan(1, 0, {1: 0, 2: 1})
        assert ufan_problems(state, fan) == []
        removed = []
        record = activate_u_fan(state, fan, 2, on_remove=removed.append)
        assert record.endpoint == 3
        assert state.colors == [1, 0, 2]
        assert fan.leaves == {2: 1}
        assert removed == [1]
        assert state.audit() == []

    def test_degenerate_u_fan(self):
        """Test that a u-fan with one leaf cannot be activated."""
        from src.core.fans import UFan, activate_u_fan
        from src.core.graph import build_graph
        from src.utils.exceptions import InvalidFanError

        graph = build_graph(3, [(0, 1), (0, 2)])
        state = _bound_state(graph, colors=[0, 1], palette=3)
        with pytest.raises(InvalidFanError):
            activate_u_fan(state, UFan(1, 0, {1: 0}), 2)

    def test_check_fan_reports_broken_u_fan(self):
        """Test that check_fan raises when a leaf edge is colored."""
        from src.core.fans import UFan, check_fan
        from src.core.graph import build_graph
        from src.utils.exceptions import InvalidFanError

        graph = build_graph(4, [(0, 1), (0, 2), (0, 3)])
        state = _bound_state(graph, colors=[2, 0, 1], palette=4)
        with pytest.raises(InvalidFanError):
            check_fan(state, UFan(1, 0, {1: 0, 2: 1}))


class TestSingleEdgeRepair:
    """Tests for greedy_color, color_one and random_color_one."""

    def test_greedy_picks_smallest_free_color(self, path4):
        """Test that Greedy-Color uses the smallest color free at both ends."""
        from src.core.repair import greedy_color

        state = _bound_state(path4, colors=[1, 0, 2], palette=3)
        assert greedy_color(state, 1) == 3
        assert state.stats.greedy_calls == 1

    def test_greedy_without_free_color(self, path4):
        """Test that Greedy-Color raises when both ends use every color."""
        from src.core.repair import greedy_color
        from src.utils.exceptions import ColoringStateError

        state = _bound_state(path4, colors=[1, 0, 2], palette=2)
        with pytest.raises(ColoringStateError):
            greedy_color(state, 1)

    def test_color_one_on_triangle(self, triangle):
        """Test that Color-One colors the last triangle edge within three colors."""
        from src.core.repair import color_one

        state = _bound_state(triangle, colors=[0, 1, 2], palette=3)
        color_one(state)
        assert state.ell == 0
        assert sorted(state.colors) == [1, 2, 3]
        assert state.audit() == []

    @settings(max_examples=40, deadline=None)
    @given(simple_graphs(max_n=12), st.integers(0, 10_000))
    def test_color_one_completes_any_graph(self, graph, seed):
        """Test that repeated Color-One reaches a proper (d+1)-coloring."""
        from src.core.repair import color_one, random_color_one

        state = _bound_state(graph)
        rng = random.Random(seed)
        while state.ell:
            if rng.random() < 0.5:
                color_one(state)
            else:
                random_color_one(state, rng)
        assert state.audit() == []
        assert max(state.colors) <= graph.max_degree + 1
        assert state.stats.fan_bound_violations == 0

    def test_random_color_one_is_seeded(self, petersen):
        """Test that equal seeds color the same way."""
        from src.core.repair import random_color_one

        runs = []
        for _ in range(2):
            state = _bound_state(petersen)
            rng = random.Random(7)
            while state.ell:
                random_color_one(state, rng)
            runs.append(list(state.colors))
        assert runs[0] == runs[1]
