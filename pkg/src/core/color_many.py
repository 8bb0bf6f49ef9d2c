"""
Color-Many: color a constant fraction of l/K uncolored edges in linear time.

An alpha-collection is a set of vertex-disjoint fans (primed c-fans and
u-fans) that all use the same color alpha. It is built greedily over the
vertices of I_alpha, merging fans whenever a new leaf runs into a fan that
is already collected, and then activated in one stage per color beta != alpha.
After each activation the alpha/beta path through the activated center is
cleaned up so that no collected fan stays damaged and no later activation of
the same stage walks over the same vertices again.
"""

import enum
from collections import deque
from typing import Deque, Dict, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from src.core.coloring_state import ColoringState
from src.core.fans import (
    PrimedCFan,
    UFan,
    activate_c_fan,
    activate_u_fan,
    cfan_problems,
    flip_path,
    shift_cfan,
    trace_path,
    ufan_problems,
    walk_alternating,
)
from src.utils.config import UNCOLORED
from src.utils.exceptions import (
    CollectionInvariantError,
    InvalidFanError,
    NoUncoloredEdgesError,
    NotPathEndpointError,
)
from src.utils.logging_config import debug_enabled, log_debug
from src.utils.performance_monitor import ColorManyReport

Fan = Union[PrimedCFan, UFan]


class CollectionEvent(enum.Enum):
    """How a collection fan construction ended without producing a new c-fan."""
    CONSUMED = "consumed"  # a leaf missed alpha; v-x_k colored by alpha
    MERGED_CENTER = "merged-center"  # leaf was a c-fan center
    NEW_UFAN = "new-ufan"  # leaf was a c-fan leaf; a u-fan replaces both fans
    JOINED_UFAN = "joined-ufan"  # leaf was a u-fan center; v joins as a leaf
    COLORED_LEAF = "colored-leaf"  # leaf was a u-fan leaf; v-x_k colored by alpha


def choose_alpha(state: ColoringState) -> Tuple[int, List[int]]:
    """
    Pick the color missing at the most incomplete vertices.

    Colored edges at incomplete vertices are counted per color (an edge
    between two incomplete vertices counts twice) and the least used color
    wins, ties to the smallest.

    Returns:
        (alpha, I_alpha) with I_alpha in increasing vertex order

    Raises:
        NoUncoloredEdgesError: If the scope is fully colored
    """
    pool = state.uncolored_edges()
    if not pool:
        raise NoUncoloredEdgesError("No uncolored edges in scope")
    endpoints = state.graph.endpoints
    incomplete = sorted({x for e in pool for x in endpoints[e]})

    colors = state.colors
    used = [colors[e] for v in incomplete for e, _ in state.incident(v) if colors[e] != UNCOLORED]
    counts = np.bincount(np.asarray(used, dtype=np.int64), minlength=state.palette + 1)
    alpha = int(np.argmin(counts[1:state.palette + 1])) + 1
    i_alpha = [v for v in incomplete if state.is_missing(v, alpha)]
    return alpha, i_alpha


class AlphaCollection:
    """
    Vertex-disjoint fans sharing the color alpha.

    Attributes:
        alpha: The shared color
        i_alpha: Incomplete vertices missing alpha when the collection was started;
            build drops the endpoints of every alpha edge it colors from the
            membership set behind covered_i_alpha
        vertex_of: Fan owning each collected vertex
        covered_i_alpha: |V(C) ∩ I_alpha|
        damaged: Vertex of the one fan an activation may have damaged, if any
        events: Count of each way a fan construction ended
        report: Counters for the enclosing Color-Many call
    """

    def __init__(self, state: ColoringState, alpha: int, i_alpha: Sequence[int],
                 report: Optional[ColorManyReport] = None):
        self.state = state
        self.alpha = alpha
        self.i_alpha = list(i_alpha)
        self._i_alpha_set = set(self.i_alpha)
        self._fans: Dict[int, Fan] = {}
        self.vertex_of: Dict[int, Fan] = {}
        self.covered_i_alpha = 0
        self.damaged: Optional[int] = None
        self.events: Dict[CollectionEvent, int] = {event: 0 for event in CollectionEvent}
        self.report = report if report is not None else ColorManyReport(
            alpha, state.palette, state.ell, i_alpha=len(self.i_alpha))

        self._pending: Set[int] = set()
        self._stage_order: List[int] = []
        self._queues: Dict[int, Deque[Fan]] = {}
        self._path_owner: Dict[int, int] = {}
        self._calls = 0

    # === Membership ===

    @property
    def fans(self) -> List[Fan]:
        """Live fans in the order they were collected."""
        return list(self._fans.values())

    def __len__(self) -> int:
        return len(self._fans)

    def __contains__(self, v: int) -> bool:
        return v in self.vertex_of

    def role(self, v: int) -> Optional[str]:
        """'center', 'leaf' or None."""
        fan = self.vertex_of.get(v)
        if fan is None:
            return None
        return 'center' if fan.center == v else 'leaf'

    def _claim(self, v: int, fan: Fan):
        self.vertex_of[v] = fan
        if v in self._i_alpha_set:
            self.covered_i_alpha += 1

    def _release(self, v: int):
        fan = self.vertex_of.pop(v, None)
        if fan is not None and v in self._i_alpha_set:
            self.covered_i_alpha -= 1
        if self.damaged == v:
            self.damaged = None

    def _retire(self, edge: int):
        # Endpoints of a build-colored alpha edge no longer miss alpha and leave I_alpha
        for x in self.state.graph.endpoints[edge]:
            if x in self._i_alpha_set:
                self._i_alpha_set.discard(x)
                if x in self.vertex_of:
                    self.covered_i_alpha -= 1

    def _add(self, fan: Fan):
        self._fans[id(fan)] = fan
        for x in fan.vertices():
            self._claim(x, fan)

    def _discard(self, fan: Fan):
        if not fan.alive:
            return
        fan.alive = False
        self._fans.pop(id(fan), None)
        for x in fan.vertices():
            if self.vertex_of.get(x) is fan:
                self._release(x)

    def _remove_leaf(self, fan: UFan, x: int):
        del fan.leaves[x]
        self._release(x)

    # === Build ===

    def _uncolored_edge_at(self, v: int) -> Optional[int]:
        colors = self.state.colors
        for e, _ in self.state.incident(v):
            if colors[e] == UNCOLORED:
                return e
        return None

    def build(self):
        """
        Run a collection fan from every vertex of I_alpha still in the worklist.

        Vertices leave the worklist when processed or when a consumed fan
        colors an alpha edge at them.
        """
        state, alpha = self.state, self.alpha
        self._pending = set(self.i_alpha)
        for v in self.i_alpha:
            if v not in self._pending:
                continue
            self._pending.discard(v)
            if v in self.vertex_of or not state.is_missing(v, alpha):
                continue
            edge = self._uncolored_edge_at(v)
            if edge is None:
                continue
            outcome = self.make_fan(v, state.other(edge, v), edge)
            if isinstance(outcome, PrimedCFan):
                self._add(outcome)
            if state.debug:
                self.check_invariants()

        self.report.ell_after_build = state.ell
        self.report.collection_i_alpha = self.covered_i_alpha

    def make_fan(self, v: int, x0: int, edge: int) -> Union[PrimedCFan, CollectionEvent]:
        """
        Grow a c-fan at v that stays disjoint from the collection.

        Returns:
            The primed fan (not yet added), or the event that ended the construction
        """
        state, alpha = self.state, self.alpha
        fan = PrimedCFan(alpha, v, [x0], [edge])
        stamp = state.next_stamp()
        state.mark(x0, stamp)

        try:
            while True:
                fan.iterations += 1
                k = fan.k
                x_k = fan.leaves[-1]
                other = self.vertex_of.get(x_k)
                if other is not None:
                    return self.merge(fan, other)
                if state.is_missing(x_k, alpha):
                    shift_cfan(state, fan, k)
                    state.set_color(fan.edges[k], alpha)
                    self._retire(fan.edges[k])
                    fan.alive = False
                    self._pending.discard(x_k)
                    self.events[CollectionEvent.CONSUMED] += 1
                    return CollectionEvent.CONSUMED

                beta = state.pick_missing(x_k)
                if state.is_missing(v, beta):
                    fan.beta = beta
                    return fan
                e = state.edge_with_color(v, beta)
                x = state.other(e, v)
                if state.is_marked(x, stamp):
                    fan.beta = beta
                    return fan
                state.mark(x, stamp)
                fan.leaves.append(x)
                fan.edges.append(e)
        finally:
            state.stats.record_fan(fan.iterations, state.scope_degree(v))

    def merge(self, fan: PrimedCFan, other: Fan) -> CollectionEvent:
        """
        Resolve a growing c-fan whose last leaf lies in a collected fan.

        The growing fan is shifted from its last leaf and discarded in every case.
        """
        state, alpha = self.state, self.alpha
        k = fan.k
        x_k = fan.leaves[-1]
        shift_cfan(state, fan, k)
        edge = fan.edges[k]
        fan.alive = False

        if other.kind == 'c':
            if other.center == x_k:
                state.set_color(edge, alpha)
                self._discard(other)
                self._retire(edge)
                event = CollectionEvent.MERGED_CENTER
            else:
                j = other.leaves.index(x_k)
                shift_cfan(state, other, j)
                u, u_edge = other.center, other.edges[j]
                self._discard(other)
                self._add(UFan(alpha, x_k, {u: u_edge, fan.center: edge}))
                event = CollectionEvent.NEW_UFAN
        elif other.center == x_k:
            other.leaves[fan.center] = edge
            self._claim(fan.center, other)
            event = CollectionEvent.JOINED_UFAN
        else:
            state.set_color(edge, alpha)
            self._remove_leaf(other, x_k)
            if other.degenerate:
                self._discard(other)
            self._retire(edge)
            event = CollectionEvent.COLORED_LEAF

        self.events[event] += 1
        return event

    # === Activation ===

    def _schedule_u(self, fan: UFan, start: int):
        # Missing colors of later stages at a u-fan center are frozen until their stage
        state = self.state
        for index in range(start, len(self._stage_order)):
            beta = self._stage_order[index]
            if state.is_missing(fan.center, beta):
                self._queues[beta].append(fan)
                return

    def _color_counts(self) -> np.ndarray:
        colors = self.state.colors
        return np.bincount(np.asarray([colors[e] for e in self.state.scope], dtype=np.int64),
                           minlength=self.state.palette + 1)

    def activate(self):
        """
        Activate every collected fan, one stage per color beta != alpha.

        Raises:
            CollectionInvariantError: If fans survive the last stage
        """
        state, alpha = self.state, self.alpha
        self._stage_order = [beta for beta in range(1, state.palette + 1) if beta != alpha]
        self._queues = {beta: deque() for beta in self._stage_order}
        for fan in self._fans.values():
            if fan.kind == 'c':
                self._queues[fan.beta].append(fan)
            else:
                self._schedule_u(fan, 0)

        for stage, beta in enumerate(self._stage_order):
            self._path_owner = {}
            before = self._color_counts() if state.debug else None
            queue = self._queues[beta]
            while queue:
                fan = queue.popleft()
                if not fan.alive:
                    continue
                if fan.kind == 'u' and not state.is_missing(fan.center, beta):
                    self._schedule_u(fan, stage + 1)
                    continue
                self._activate_fan(fan, beta, stage)
                if state.debug:
                    self.check_invariants()
            if before is not None:
                changed = np.flatnonzero(self._color_counts() != before)
                self.report.conservation_violations += sum(
                    1 for gamma in changed if gamma not in (UNCOLORED, alpha, beta))

        self.report.ell_after = state.ell
        if self._fans:
            raise CollectionInvariantError(f"{len(self._fans)} fans left after the last stage")

    def _activate_fan(self, fan: Fan, beta: int, stage: int):
        state = self.state
        ell_before, covered_before = state.ell, self.covered_i_alpha
        v = fan.center

        if fan.kind == 'c':
            self._discard(fan)
            record = activate_c_fan(state, fan)
        else:
            record = activate_u_fan(state, fan, beta, on_remove=self._release)
            if fan.degenerate:
                self._discard(fan)
            else:
                self._schedule_u(fan, stage + 1)

        self.damaged = None
        if record.length > 0 and record.endpoint in self.vertex_of:
            self.damaged = record.endpoint
        self.disconnect(v, beta)

        colored = ell_before - state.ell
        removed = covered_before - self.covered_i_alpha
        report = self.report
        report.iterations += 1
        report.max_iteration_excess = max(report.max_iteration_excess, removed - colored)
        if colored <= 0:
            report.zero_progress_iterations += 1

    def _mark_path(self, vertices: Sequence[int], call: int):
        owner = self._path_owner
        for x in vertices:
            previous = owner.get(x)
            if previous is not None and previous != call:
                self.report.disjointness_violations += 1
            owner[x] = call

    def disconnect(self, v: int, beta: int):
        """
        Clear the alpha/beta path through v of collected fans at its ends.

        Each pass picks an end lying in a fan, the damaged one first, and
        either discards the fan, drops the end from its u-fan, or colors an
        edge from the u-fan center and extends the path through it.
        """
        self._calls += 1
        call = self._calls
        try:
            path = trace_path(self.state, v, self.alpha, beta)
        except NotPathEndpointError:
            # An alternating cycle has no ends to clear
            return
        self._mark_path(path, call)
        ends = [path[0], path[-1]]

        while True:
            sides = [i for i in (0, 1) if ends[i] in self.vertex_of]
            if not sides:
                return
            side = sides[0]
            for i in sides:
                if ends[i] == self.damaged:
                    side = i
            w = ends[side]
            fan = self.vertex_of[w]
            if fan.kind == 'c' or fan.k <= 2:
                self._discard(fan)
            elif fan.center != w:
                self._remove_leaf(fan, w)
            else:
                ends[side] = self._repair_center(fan, w, beta, call)

    def _repair_center(self, fan: UFan, w: int, beta: int, call: int) -> int:
        """Color an edge at u-fan center w by alpha or beta; return the new path end."""
        state, alpha = self.state, self.alpha
        x = next((leaf for leaf in fan.leaves if self._path_owner.get(leaf) != call), None)
        if x is None:
            raise CollectionInvariantError(f"Every leaf of the u-fan at {w} lies on the path")
        edge = fan.leaves[x]
        self._remove_leaf(fan, x)

        if state.is_missing(w, alpha):
            used = alpha
            self.damaged = None
        else:
            used = beta
            record = flip_path(state, x, alpha, beta)
            if record.length > 0 and record.endpoint in self.vertex_of:
                self.damaged = record.endpoint
        state.set_color(edge, used)

        rest, _ = walk_alternating(state, x, beta if used == alpha else alpha, alpha, beta)
        extension = [x] + rest
        self._mark_path(extension, call)
        return extension[-1]

    # === Checks ===

    def problems(self) -> List[str]:
        """Every way the collection currently fails to be an alpha-collection."""
        state, alpha = self.state, self.alpha
        problems: List[str] = []
        claimed = 0
        for fan in self._fans.values():
            vertices = fan.vertices()
            claimed += len(vertices)
            for x in vertices:
                if self.vertex_of.get(x) is not fan:
                    problems.append(f"vertex {x} of the fan at {fan.center} is not mapped to it")
            if fan.kind == 'c':
                problems.extend(cfan_problems(state, fan))
                if fan.beta is None:
                    problems.append(f"c-fan at {fan.center} is not primed")
                if fan.center not in self._i_alpha_set:
                    problems.append(f"c-fan center {fan.center} is not in I_alpha")
                for x in fan.leaves:
                    if state.is_missing(x, alpha):
                        problems.append(f"c-fan leaf {x} misses alpha")
                    if x in self._i_alpha_set:
                        problems.append(f"c-fan leaf {x} is in I_alpha")
            else:
                problems.extend(ufan_problems(state, fan))
                if fan.degenerate:
                    problems.append(f"u-fan at {fan.center} has {fan.k} leaf")
                if fan.center in self._i_alpha_set:
                    problems.append(f"u-fan center {fan.center} is in I_alpha")
                for x in fan.leaves:
                    if x not in self._i_alpha_set:
                        problems.append(f"u-fan leaf {x} is not in I_alpha")
        if claimed != len(self.vertex_of):
            problems.append("fans overlap or the vertex map holds stale entries")
        covered = sum(1 for x in self.vertex_of if x in self._i_alpha_set)
        if covered != self.covered_i_alpha:
            problems.append(f"covered count {self.covered_i_alpha}, recount {covered}")
        if self.damaged is not None:
            problems.append(f"vertex {self.damaged} is still marked damaged")
        return problems

    def check_invariants(self):
        """Raise CollectionInvariantError if problems() finds anything."""
        problems = self.problems()
        if problems:
            raise CollectionInvariantError("; ".join(problems))


def build_collection(state: ColoringState, alpha: int, i_alpha: Sequence[int]) -> AlphaCollection:
    """Build an alpha-collection over I_alpha."""
    collection = AlphaCollection(state, alpha, i_alpha)
    collection.build()
    return collection


def make_collection_fan(state: ColoringState, v: int, x0: int, alpha: int,
                        collection: AlphaCollection) -> Union[PrimedCFan, CollectionEvent]:
    """
    Grow a fan at v for ``collection``; a returned fan is added to it.

    Raises:
        InvalidFanError: If v and x0 are not joined by a scoped edge
    """
    edge = next((e for e, y in state.incident(v) if y == x0 and state.colors[e] == UNCOLORED), None)
    if edge is None:
        raise InvalidFanError(f"No uncolored scoped edge between {v} and {x0}")
    outcome = collection.make_fan(v, x0, edge)
    if isinstance(outcome, PrimedCFan):
        collection._add(outcome)
    return outcome


def merge_fans(state: ColoringState, fan: PrimedCFan, other: Fan,
               collection: AlphaCollection) -> CollectionEvent:
    """Merge a growing c-fan into the collected fan holding its last leaf."""
    return collection.merge(fan, other)


def activate_collection(state: ColoringState, collection: AlphaCollection):
    """Activate every fan of ``collection`` until it is empty."""
    collection.activate()


def disconnect_vertex(state: ColoringState, collection: AlphaCollection, v: int, beta: int):
    """Clear the alpha/beta path through v of collected fans at its ends."""
    collection.disconnect(v, beta)


def color_many(state: ColoringState) -> int:
    """
    Color a batch of uncolored edges through one alpha-collection.

    Args:
        state: Bound coloring state over a simple scope

    Returns:
        Number of edges colored, at least 2 * l / (7 * K)

    Raises:
        NoUncoloredEdgesError: If every scoped edge is colored
    """
    alpha, i_alpha = choose_alpha(state)
    report = ColorManyReport(alpha, state.palette, state.ell, i_alpha=len(i_alpha))
    collection = AlphaCollection(state, alpha, i_alpha, report)
    collection.build()
    collection.activate()
    state.stats.color_many.append(report)

    if debug_enabled():
        log_debug(f"color_many alpha={alpha} |I_alpha|={report.i_alpha} "
                  f"l: {report.ell_before} -> {report.ell_after_build} -> {report.ell_after} "
                  f"events={ {event.value: count for event, count in collection.events.items() if count} }")
    return report.colored
