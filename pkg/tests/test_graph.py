"""
Tests for the graph model, the pair dictionaries and the coloring state.
"""

import random
import sys
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))


class TestGraph:
    """Tests for build_graph and Graph."""

    def test_triangle_shape(self, triangle):
        """Test that a triangle has three edges and degree two everywhere."""
        assert triangle.n == 3
        assert triangle.m == 3
        assert triangle.max_degree == 2
        assert triangle.is_simple

    def test_incidence_follows_edge_order(self, triangle):
        """Test that incidence lists hold (edge, other endpoint) in edge order."""
        assert triangle.incidence[0] == [(0, 1), (2, 2)]
        assert triangle.incidence[1] == [(0, 0), (1, 2)]

    def test_parallel_edges_are_not_simple(self, multigraph):
        """Test that repeated pairs in either orientation clear is_simple."""
        from src.utils.exceptions import NotSimpleError

        assert not multigraph.is_simple
        assert multigraph.max_degree == 4
        with pytest.raises(NotSimpleError):
            multigraph.require_simple()

    def test_self_loop_rejected(self):
        """Test that a self-loop raises SelfLoopError."""
        from src.core.graph import build_graph
        from src.utils.exceptions import SelfLoopError

        with pytest.raises(SelfLoopError):
            build_graph(2, [(0, 1), (1, 1)])

    def test_isolated_vertex_rejected(self):
        """Test that a vertex without edges raises IsolatedVertexError."""
        from src.core.graph import build_graph
        from src.utils.exceptions import IsolatedVertexError

        with pytest.raises(IsolatedVertexError) as info:
            build_graph(3, [(0, 1)])
        assert info.value.vertex == 2

    def test_vertex_out_of_range(self):
        """Test that endpoints outside [0, n) are rejected."""
        from src.core.graph import build_graph
        from src.utils.exceptions import VertexOutOfRangeError

        with pytest.raises(VertexOutOfRangeError):
            build_graph(2, [(0, 2)])

    def test_empty_graph(self):
        """Test that a graph without vertices is accepted."""
        from src.core.graph import build_graph

        g = build_graph(0, [])
        assert g.m == 0
        assert g.max_degree == 0

    def test_networkx_round_trip(self, petersen):
        """Test that the Petersen graph converts with its 15 edges and degree 3."""
        assert petersen.n == 10
        assert petersen.m == 15
        assert petersen.max_degree == 3
        exported = petersen.to_networkx()
        assert exported.number_of_edges() == 15

    def test_scope_degrees(self, triangle):
        """Test that scope degrees count only the scoped edges."""
        from src.core.graph import scope_degrees, scope_max_degree

        assert scope_degrees(triangle, [0]) == {0: 1, 1: 1}
        assert scope_max_degree(triangle, [0, 1]) == 2
        assert scope_max_degree(triangle, []) == 0


class TestPairDictionary:
    """Tests for the two-level and direct dictionaries."""

    def test_sizing_example(self):
        """Test sizing for n=8, stride=4, M=16: U=32, b=2, 17 ranges."""
        from src.core.pair_dictionary import PairDictionary, block_size_for

        assert block_size_for(32, 16) == 2
        d = PairDictionary(8, 4, 16)
        assert d.universe == 32
        assert d.block_size == 2
        assert d.num_ranges == 17
        assert d.locate(5, 2) == (11, 0)

    def test_top_key_uses_last_range(self):
        """Test that the largest key (n - 1, stride) lands in the extra 17th range and round-trips."""
        from src.core.pair_dictionary import PairDictionary

        d = PairDictionary(8, 4, 16)
        assert d.locate(7, 4) == (16, 0)
        d.insert(7, 4, 3)
        assert d.search(7, 4) == 3
        assert d.range_count(16) == 1

    def test_insert_search_delete(self):
        """Test that an inserted key is found and a deleted one is gone."""
        from src.core.pair_dictionary import PairDictionary

        d = PairDictionary(8, 4, 16)
        assert d.search(5, 2) is None
        d.insert(5, 2, 7)
        assert d.search(5, 2) == 7
        assert d.range_count(11) == 1
        assert len(d) == 1
        d.delete(5, 2)
        assert d.search(5, 2) is None
        assert d.range_block(11) is None
        assert len(d) == 0

    def test_blocks_return_to_free_list(self):
        """Test that emptying a range releases its block."""
        from src.core.pair_dictionary import PairDictionary

        d = PairDictionary(8, 4, 16)
        d.insert(5, 2, 1)
        d.insert(5, 1, 2)  # index 21, range 10
        assert d.blocks_in_use == 2
        assert d.blocks_free == 14
        d.delete(5, 2)
        d.delete(5, 1)
        assert d.blocks_free == 16

    def test_duplicate_key(self):
        """Test that inserting a present key raises DuplicateKeyError."""
        from src.core.pair_dictionary import PairDictionary
        from src.utils.exceptions import DuplicateKeyError

        d = PairDictionary(8, 4, 16)
        d.insert(0, 1, 3)
        with pytest.raises(DuplicateKeyError):
            d.insert(0, 1, 4)

    def test_absent_delete_is_ignored(self):
        """Test that deleting an absent key changes nothing."""
        from src.core.pair_dictionary import PairDictionary

        d = PairDictionary(8, 4, 16)
        d.delete(3, 3)
        assert len(d) == 0
        assert d.blocks_free == 16

    @pytest.mark.parametrize("key", [(0, 0), (0, 5), (8, 1), (-1, 1)])
    def test_key_out_of_range(self, key):
        """Test that keys outside the universe raise KeyRangeError."""
        from src.core.pair_dictionary import PairDictionary
        from src.utils.exceptions import KeyRangeError

        d = PairDictionary(8, 4, 16)
        with pytest.raises(KeyRangeError):
            d.search(*key)

    def test_full_dictionary(self):
        """Test that a second range cannot open when every block is taken."""
        from src.core.pair_dictionary import PairDictionary
        from src.utils.exceptions import DictionaryFullError

        d = PairDictionary(8, 4, 1)
        d.insert(0, 1, 0)
        with pytest.raises(DictionaryFullError):
            d.insert(7, 4, 1)

    def test_auto_backend_choice(self):
        """Test that 'auto' picks direct for dense and two-level for sparse universes."""
        from src.core.pair_dictionary import DirectDictionary, PairDictionary, make_dictionary

        assert isinstance(make_dictionary(4, 3, 2 * 6, 'auto'), DirectDictionary)
        assert isinstance(make_dictionary(10000, 101, 2 * 10000, 'auto'), PairDictionary)

    def test_two_level_writes_fewer_cells(self):
        """Test that the two-level init touches far fewer cells than the direct one on sparse keys."""
        from src.core.pair_dictionary import DirectDictionary, PairDictionary

        two_level = PairDictionary(10000, 1001, 20000)
        direct = DirectDictionary(10000, 1001, 20000)
        assert two_level.cells_written * 5 < direct.cells_written

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(['two-level', 'direct']),
           st.lists(st.tuples(st.sampled_from(['insert', 'delete', 'search']),
                              st.integers(0, 5), st.integers(1, 6), st.integers(0, 99)),
                    max_size=120))
    def test_matches_reference_dict(self, backend, ops):
        """Test that any operation sequence agrees with a plain dict."""
        from src.core.pair_dictionary import make_dictionary
        from src.utils.exceptions import DuplicateKeyError

        d = make_dictionary(6, 6, 36, backend)
        reference = {}
        for op, v, gamma, edge in ops:
            if op == 'insert':
                if (v, gamma) in reference:
                    with pytest.raises(DuplicateKeyError):
                        d.insert(v, gamma, edge)
                else:
                    d.insert(v, gamma, edge)
                    reference[(v, gamma)] = edge
            elif op == 'delete':
                d.delete(v, gamma)
                reference.pop((v, gamma), None)
            assert d.search(v, gamma) == reference.get((v, gamma))
            assert len(d) == len(reference)
        if backend == 'two-level':
            assert d.blocks_free + d.blocks_in_use == d.capacity


class TestColoringState:
    """Tests for ColoringState on small graphs."""

    def _bound(self, graph, palette=None):
        from src.core.coloring_state import ColoringState

        state = ColoringState(graph)
        state.bind_scope(range(graph.m), palette or graph.max_degree + 1)
        return state

    def test_bind_counts_uncolored(self, triangle):
        """Test that binding an uncolored scope sets ell to its size."""
        state = self._bound(triangle)
        assert state.ell == 3
        assert state.palette == 3
        assert state.audit() == []

    def test_set_color_updates_lookups(self, triangle):
        """Test that set_color fills the dictionary and the missing lists."""
        state = self._bound(triangle)
        state.set_color(0, 1)
        assert state.edge_with_color(0, 1) == 0
        assert state.edge_with_color(1, 1) == 0
        assert state.is_missing(2, 1)
        assert state.pick_missing(0) == 2
        assert state.ell == 2
        assert state.audit() == []

    def test_conflicting_color_rejected(self, triangle):
        """Test that a color present at an endpoint raises ColorConflictError."""
        from src.utils.exceptions import ColorConflictError

        state = self._bound(triangle)
        state.set_color(0, 1)
        with pytest.raises(ColorConflictError):
            state.set_color(1, 1)
        assert state.audit() == []

    def test_unset_restores_previous_state(self, triangle):
        """Test that unset_color undoes set_color."""
        state = self._bound(triangle)
        before = (list(state.colors), state.ell, sorted(state.missing_colors(0)))
        state.set_color(0, 1)
        state.unset_color(0)
        assert (list(state.colors), state.ell, sorted(state.missing_colors(0))) == before
        assert sorted(state.mu.colors(0)) == [1, 2, 3]
        assert state.audit() == []

    def test_mutation_errors(self, triangle):
        """Test the errors of set_color and unset_color."""
        from src.utils.exceptions import AlreadyColoredError, InvalidColorError, NotColoredError

        state = self._bound(triangle)
        with pytest.raises(InvalidColorError):
            state.set_color(0, 4)
        with pytest.raises(NotColoredError):
            state.unset_color(0)
        state.set_color(0, 1)
        with pytest.raises(AlreadyColoredError):
            state.set_color(0, 2)

    def test_out_of_scope_edge(self, triangle):
        """Test that edges outside the bound scope cannot be mutated."""
        from src.core.coloring_state import ColoringState
        from src.utils.exceptions import ScopeError

        state = ColoringState(triangle)
        state.bind_scope([0, 1], 3)
        with pytest.raises(ScopeError):
            state.set_color(2, 1)

    def test_double_bind(self, triangle):
        """Test that binding twice raises ScopeNotEmptyError."""
        from src.utils.exceptions import ScopeNotEmptyError

        state = self._bound(triangle)
        with pytest.raises(ScopeNotEmptyError):
            state.bind_scope([0], 3)

    def test_bind_with_precolored_conflict(self, triangle):
        """Test that a clashing pre-coloring raises and leaves the state unbound."""
        from src.core.coloring_state import ColoringState
        from src.utils.exceptions import ColorConflictError

        state = ColoringState(triangle, colors=[1, 1, 0])
        with pytest.raises(ColorConflictError):
            state.bind_scope(range(3), 3)
        assert not state.bound
        assert len(state.dictionary) == 0

    def test_unbind_empties_dictionary(self, triangle):
        """Test that unbinding removes every scoped entry but keeps colors."""
        state = self._bound(triangle)
        state.set_color(0, 1)
        state.unbind_scope()
        assert len(state.dictionary) == 0
        assert state.colors[0] == 1
        assert state.ell == 0

    def test_capacity_is_capped_by_palette(self, k4):
        """Test that missing lists hold min(deg + 1, K) colors."""
        state = self._bound(k4, palette=3)
        assert state.mu.capacity(0) == 3
        state.unbind_scope()
        state.bind_scope([0], 3)
        assert state.mu.capacity(0) == 2

    def test_snapshot_restore(self, triangle):
        """Test that restore brings back the colors of a snapshot."""
        state = self._bound(triangle)
        state.set_color(0, 1)
        frozen = state.snapshot()
        state.set_color(1, 2)
        state.restore(frozen)
        assert state.colors[:3] == [1, 0, 0]
        assert state.ell == 2
        assert state.audit() == []

    def test_sample_uncolored(self, triangle):
        """Test that sampling returns an uncolored edge and fails when none remain."""
        from src.utils.exceptions import NoUncoloredEdgesError

        state = self._bound(triangle)
        rng = random.Random(0)
        state.set_color(0, 1)
        assert state.sample_uncolored(rng) in (1, 2)
        state.set_color(1, 2)
        state.set_color(2, 3)
        with pytest.raises(NoUncoloredEdgesError):
            state.sample_uncolored(rng)

    def test_sample_uncolored_is_uniform(self, path4):
        """Test that seeded draws over two uncolored edges split evenly."""
        from collections import Counter

        state = self._bound(path4)
        state.set_color(0, 1)
        rng = random.Random(0)
        draws = 100_000
        counts = Counter(state.sample_uncolored(rng) for _ in range(draws))
        assert set(counts) == {1, 2}
        for edge in (1, 2):
            assert 0.49 <= counts[edge] / draws <= 0.51

    @settings(max_examples=40, deadline=None)
    @given(st.integers(4, 12), st.integers(0, 10_000), st.integers(0, 10_000))
    def test_audit_after_random_operations(self, n, graph_seed, op_seed):
        """Test that the incremental structures match a rescan after random legal operations."""
        from src.core.coloring_state import ColoringState
        from src.core.graph import graph_from_networkx

        g = nx.gnm_random_graph(n, 2 * n, seed=graph_seed)
        g.remove_nodes_from([x for x in list(g.nodes()) if g.degree(x) == 0])
        if g.number_of_edges() == 0:
            return
        graph = graph_from_networkx(g)
        state = ColoringState(graph)
        state.bind_scope(range(graph.m), graph.max_degree + 1)
        rng = random.Random(op_seed)
        for _ in range(3 * graph.m):
            e = rng.randrange(graph.m)
            if state.colors[e]:
                state.unset_color(e)
                continue
            u, v = graph.endpoints[e]
            free = [c for c in state.missing_colors(u) if state.is_missing(v, c)]
            if free:
                state.set_color(e, rng.choice(free))
        assert state.audit() == []
        state.unbind_scope()
        assert len(state.dictionary) == 0
