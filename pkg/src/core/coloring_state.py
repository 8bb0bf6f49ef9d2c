"""
Mutable partial edge-coloring over a scoped subset of a graph's edges.

A ColoringState is created once per run from the top-level graph. Each
Repair step binds the scope of its recursion node with the node's palette
size K, repairs, and unbinds. Binding populates the shared pair dictionary
and the missing-color trackers in O(scope); unbinding depopulates them.
"""

import random
from typing import Dict, Iterable, List, Optional, Tuple

from src.core.graph import Graph
from src.core.pair_dictionary import make_dictionary
from src.utils.config import BACKEND_TWO_LEVEL, EMPTY_SLOT, UNCOLORED
from src.utils.exceptions import (
    AlreadyColoredError,
    ColorConflictError,
    InvalidColorError,
    NoUncoloredEdgesError,
    NotColoredError,
    ScopeError,
    ScopeNotEmptyError,
    StateAuditError,
)
from src.utils.performance_monitor import RunStats


class MissingTracker:
    """
    Per-vertex doubly-linked lists of the colors in M(v) ∩ [cap(v)].

    Nodes live in a shared arena: the node of color gamma at vertex v is
    ``base[v] + gamma - 1``, so locating a node is O(1). cap(v) is
    min(deg_scope(v) + 1, K). The arena is reused across binds.
    """

    def __init__(self, n: int):
        self._base = [0] * n
        self._cap = [0] * n
        self._head = [EMPTY_SLOT] * n
        self._tail = [EMPTY_SLOT] * n
        self._prev: List[int] = []
        self._next: List[int] = []
        self._linked: List[bool] = []
        self._used = 0

    def init_vertex(self, v: int, cap: int):
        """Start v's list holding every color 1..cap, in increasing order."""
        base = self._used
        end = base + cap
        if end > len(self._prev):
            grow = end - len(self._prev)
            self._prev.extend([EMPTY_SLOT] * grow)
            self._next.extend([EMPTY_SLOT] * grow)
            self._linked.extend([False] * grow)
        for node in range(base, end):
            self._prev[node] = node - 1 if node > base else EMPTY_SLOT
            self._next[node] = node + 1 if node + 1 < end else EMPTY_SLOT
            self._linked[node] = True
        self._used = end
        self._base[v] = base
        self._cap[v] = cap
        self._head[v] = base if cap else EMPTY_SLOT
        self._tail[v] = end - 1 if cap else EMPTY_SLOT

    def reset(self, vertices: Iterable[int]):
        for v in vertices:
            self._cap[v] = 0
            self._head[v] = EMPTY_SLOT
            self._tail[v] = EMPTY_SLOT
        self._used = 0

    def capacity(self, v: int) -> int:
        return self._cap[v]

    def remove(self, v: int, gamma: int):
        if gamma > self._cap[v]:
            return
        node = self._base[v] + gamma - 1
        if not self._linked[node]:
            return
        prev, nxt = self._prev[node], self._next[node]
        if prev == EMPTY_SLOT:
            self._head[v] = nxt
        else:
            self._next[prev] = nxt
        if nxt == EMPTY_SLOT:
            self._tail[v] = prev
        else:
            self._prev[nxt] = prev
        self._linked[node] = False

    def append(self, v: int, gamma: int):
        if gamma > self._cap[v]:
            return
        node = self._base[v] + gamma - 1
        if self._linked[node]:
            return
        tail = self._tail[v]
        self._prev[node] = tail
        self._next[node] = EMPTY_SLOT
        if tail == EMPTY_SLOT:
            self._head[v] = node
        else:
            self._next[tail] = node
        self._tail[v] = node
        self._linked[node] = True

    def head(self, v: int) -> Optional[int]:
        node = self._head[v]
        if node == EMPTY_SLOT:
            return None
        return node - self._base[v] + 1

    def colors(self, v: int) -> List[int]:
        """List content in order; O(cap(v))."""
        out = []
        node = self._head[v]
        base = self._base[v]
        while node != EMPTY_SLOT:
            out.append(node - base + 1)
            node = self._next[node]
        return out


class ColoringState:
    """
    Partial edge-coloring of a graph with a bound scope and palette.

    Attributes:
        graph: The top-level graph
        colors: Per edge id, a color in [1, K] or UNCOLORED; shared across scopes
        palette: K for the bound scope (0 when unbound)
        ell: Number of uncolored scoped edges
        stats: Instrumentation counters
    """

    def __init__(self, graph: Graph, palette_top: Optional[int] = None,
                 backend: str = BACKEND_TWO_LEVEL, debug: bool = False,
                 colors: Optional[List[int]] = None):
        """
        Args:
            graph: Top-level graph
            palette_top: Largest palette any scope will bind (default d + 1)
            backend: Pair dictionary backend
            debug: Check local legality after every mutation
            colors: Initial per-edge colors (defaults to all uncolored)
        """
        self.graph = graph
        self.palette_top = palette_top if palette_top is not None else graph.max_degree + 1
        self.colors: List[int] = list(colors) if colors is not None else [UNCOLORED] * graph.m
        self.dictionary = make_dictionary(graph.n, self.palette_top, 2 * graph.m, backend)
        self.mu = MissingTracker(graph.n)
        self.debug = debug
        self.stats = RunStats()

        self.palette = 0
        self.ell = 0
        self._bound = False
        self._scope: List[int] = []
        self._in_scope = bytearray(graph.m)
        self._deg = [0] * graph.n
        self._touched: List[int] = []
        self._incident: Dict[int, List[Tuple[int, int]]] = {}
        self._pool: List[int] = []
        self._pool_pos = [EMPTY_SLOT] * graph.m
        self._marks = [0] * graph.n
        self._generation = 0

    # === Scope ===

    @property
    def bound(self) -> bool:
        return self._bound

    @property
    def scope(self) -> List[int]:
        return self._scope

    def bind_scope(self, edges: Iterable[int], palette: int):
        """
        Govern ``edges`` with palette size ``palette``.

        Raises:
            ScopeNotEmptyError: If a scope is already bound
            InvalidColorError: If a pre-colored edge uses a color above the palette
            ColorConflictError: If pre-colored edges clash (the scope is left unbound)
        """
        if self._bound:
            raise ScopeNotEmptyError("A scope is already bound; unbind it first")
        if not 1 <= palette <= self.palette_top:
            raise InvalidColorError(f"Palette {palette} outside 1..{self.palette_top}")

        graph = self.graph
        scope = list(edges)
        for e in scope:
            if self.colors[e] > palette:
                raise InvalidColorError(f"Edge {e} has color {self.colors[e]} above palette {palette}")
        self._scope = scope
        self.palette = palette
        self._bound = True
        deg = self._deg
        incident = self._incident

        for e in self._scope:
            self._in_scope[e] = 1
            u, v = graph.endpoints[e]
            for x, y in ((u, v), (v, u)):
                if deg[x] == 0:
                    self._touched.append(x)
                    incident[x] = []
                deg[x] += 1
                incident[x].append((e, y))

        for x in self._touched:
            self.mu.init_vertex(x, min(deg[x] + 1, palette))

        for e in self._scope:
            gamma = self.colors[e]
            if gamma == UNCOLORED:
                self._pool_add(e)
                continue
            u, v = graph.endpoints[e]
            for x in (u, v):
                other = self.dictionary.search(x, gamma)
                if other is not None:
                    self.unbind_scope()
                    raise ColorConflictError(e, x, gamma, other)
                self.dictionary.insert(x, gamma, e)
                self.mu.remove(x, gamma)
        self.ell = len(self._pool)

    def unbind_scope(self):
        """Remove every scoped entry from the shared structures."""
        if not self._bound:
            return
        graph = self.graph
        for e in self._scope:
            gamma = self.colors[e]
            if gamma != UNCOLORED:
                u, v = graph.endpoints[e]
                # Only delete entries that point at e; a failed bind may have left partial state
                if self.dictionary.search(u, gamma) == e:
                    self.dictionary.delete(u, gamma)
                if self.dictionary.search(v, gamma) == e:
                    self.dictionary.delete(v, gamma)
            self._in_scope[e] = 0
            self._pool_pos[e] = EMPTY_SLOT
        for x in self._touched:
            self._deg[x] = 0
        self.mu.reset(self._touched)
        self._touched = []
        self._incident = {}
        self._pool = []
        self._scope = []
        self.palette = 0
        self.ell = 0
        self._bound = False

    def in_scope(self, e: int) -> bool:
        return bool(self._in_scope[e])

    def scope_degree(self, v: int) -> int:
        return self._deg[v]

    def incident(self, v: int) -> List[Tuple[int, int]]:
        """Scoped (edge, other endpoint) pairs at v, in edge order."""
        return self._incident.get(v, [])

    def other(self, e: int, v: int) -> int:
        u, w = self.graph.endpoints[e]
        return w if u == v else u

    # === Uncolored pool ===

    def _pool_add(self, e: int):
        self._pool_pos[e] = len(self._pool)
        self._pool.append(e)

    def _pool_remove(self, e: int):
        pos = self._pool_pos[e]
        last = self._pool.pop()
        if last != e:
            self._pool[pos] = last
            self._pool_pos[last] = pos
        self._pool_pos[e] = EMPTY_SLOT

    def uncolored_edges(self) -> List[int]:
        """The uncolored pool in pool order (a live view; do not mutate)."""
        return self._pool

    def first_uncolored(self) -> int:
        if not self._pool:
            raise NoUncoloredEdgesError("No uncolored edges in scope")
        return self._pool[0]

    def sample_uncolored(self, rng: random.Random) -> int:
        """Uniformly random uncolored scoped edge."""
        if not self._pool:
            raise NoUncoloredEdgesError("No uncolored edges in scope")
        return self._pool[rng.randrange(len(self._pool))]

    # === Queries ===

    def _check_color(self, gamma: int):
        if not 1 <= gamma <= self.palette:
            raise InvalidColorError(f"Color {gamma} outside palette 1..{self.palette}")

    def edge_with_color(self, v: int, gamma: int) -> Optional[int]:
        self._check_color(gamma)
        return self.dictionary.search(v, gamma)

    def is_missing(self, v: int, gamma: int) -> bool:
        self._check_color(gamma)
        return self.dictionary.search(v, gamma) is None

    def pick_missing(self, v: int) -> int:
        """A color missing at v, from the head of its tracker list."""
        gamma = self.mu.head(v)
        if gamma is None:
            raise ScopeError(f"Vertex {v} has no scoped edge or an exhausted tracker")
        return gamma

    def missing_colors(self, v: int) -> List[int]:
        """All of M(v) within the palette; O(K)."""
        search = self.dictionary.search
        return [gamma for gamma in range(1, self.palette + 1) if search(v, gamma) is None]

    # === Mutations ===

    def set_color(self, e: int, gamma: int):
        """
        Color scoped, uncolored edge e with gamma.

        Raises:
            ScopeError: If e is not in the bound scope
            AlreadyColoredError: If e has a color
            InvalidColorError: If gamma is outside the palette
            ColorConflictError: If gamma is not missing at an endpoint
        """
        if not self._in_scope[e]:
            raise ScopeError(f"Edge {e} is not in the bound scope")
        if self.colors[e] != UNCOLORED:
            raise AlreadyColoredError(e, self.colors[e])
        self._check_color(gamma)
        u, v = self.graph.endpoints[e]
        search = self.dictionary.search
        for x in (u, v):
            other = search(x, gamma)
            if other is not None:
                raise ColorConflictError(e, x, gamma, other)

        self.colors[e] = gamma
        self.dictionary.insert(u, gamma, e)
        self.dictionary.insert(v, gamma, e)
        self.mu.remove(u, gamma)
        self.mu.remove(v, gamma)
        self._pool_remove(e)
        self.ell -= 1
        if self.debug:
            self._check_local(u)
            self._check_local(v)

    def unset_color(self, e: int):
        """
        Uncolor scoped edge e.

        Raises:
            ScopeError: If e is not in the bound scope
            NotColoredError: If e has no color
        """
        if not self._in_scope[e]:
            raise ScopeError(f"Edge {e} is not in the bound scope")
        gamma = self.colors[e]
        if gamma == UNCOLORED:
            raise NotColoredError(e)
        u, v = self.graph.endpoints[e]
        self.colors[e] = UNCOLORED
        self.dictionary.delete(u, gamma)
        self.dictionary.delete(v, gamma)
        self.mu.append(u, gamma)
        self.mu.append(v, gamma)
        self._pool_add(e)
        self.ell += 1

    def next_stamp(self) -> int:
        """A fresh generation number for vertex marks."""
        self._generation += 1
        return self._generation

    def mark(self, v: int, stamp: int):
        self._marks[v] = stamp

    def is_marked(self, v: int, stamp: int) -> bool:
        return self._marks[v] == stamp

    # === Snapshots ===

    def snapshot(self) -> Dict[int, int]:
        """Colors of the bound scope, for a later restore."""
        return {e: self.colors[e] for e in self._scope}

    def restore(self, snapshot: Dict[int, int]):
        """Reset the bound scope to a snapshot taken from the same scope."""
        scope, palette = self._scope, self.palette
        self.unbind_scope()
        for e, gamma in snapshot.items():
            self.colors[e] = gamma
        self.bind_scope(scope, palette)

    # === Checks ===

    def _check_local(self, v: int):
        seen: Dict[int, int] = {}
        for e, _ in self.incident(v):
            gamma = self.colors[e]
            if gamma == UNCOLORED:
                continue
            if gamma in seen:
                raise ColorConflictError(e, v, gamma, seen[gamma])
            seen[gamma] = e

    def audit(self) -> List[str]:
        """
        Recompute every structure from scratch and compare.

        Returns:
            Divergence descriptions (empty when consistent)
        """
        problems: List[str] = []
        graph = self.graph
        uncolored = [e for e in self._scope if self.colors[e] == UNCOLORED]

        if self.ell != len(uncolored):
            problems.append(f"ell={self.ell} but {len(uncolored)} uncolored edges")
        if sorted(self._pool) != sorted(uncolored):
            problems.append("uncolored pool differs from the uncolored scoped edges")
        for pos, e in enumerate(self._pool):
            if self._pool_pos[e] != pos:
                problems.append(f"pool index of edge {e} is {self._pool_pos[e]}, expected {pos}")

        entries = 0
        for v in self._touched:
            at_v: Dict[int, int] = {}
            for e, _ in self.incident(v):
                gamma = self.colors[e]
                if gamma == UNCOLORED:
                    continue
                if gamma in at_v:
                    problems.append(f"edges {at_v[gamma]} and {e} share color {gamma} at {v}")
                at_v[gamma] = e
            for gamma in range(1, self.palette + 1):
                found = self.dictionary.search(v, gamma)
                if found != at_v.get(gamma):
                    problems.append(f"dictionary ({v}, {gamma}) -> {found}, scan -> {at_v.get(gamma)}")
            entries += len(at_v)
            expected_mu = {gamma for gamma in range(1, self.mu.capacity(v) + 1) if gamma not in at_v}
            listed = self.mu.colors(v)
            if len(listed) != len(set(listed)) or set(listed) != expected_mu:
                problems.append(f"mu({v}) = {sorted(listed)}, expected {sorted(expected_mu)}")
            if self.mu.capacity(v) != min(self._deg[v] + 1, self.palette):
                problems.append(f"mu({v}) capacity {self.mu.capacity(v)} wrong")

        if len(self.dictionary) != entries:
            problems.append(f"dictionary holds {len(self.dictionary)} entries, expected {entries}")
        blocks_free = getattr(self.dictionary, 'blocks_free', None)
        if blocks_free is not None:
            if blocks_free + self.dictionary.blocks_in_use != self.dictionary.capacity:
                problems.append("dictionary free list does not conserve blocks")
        return problems

    def check(self):
        """Raise StateAuditError if audit() finds anything."""
        problems = self.audit()
        if problems:
            raise StateAuditError(problems)
