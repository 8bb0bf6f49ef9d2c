"""
Performance monitoring utilities for the edge-coloring engine.

This module provides wall-clock timing and the instrumentation counters the
repair subroutines, the prune step and the Euler partition report into.
"""

import math
import time
from dataclasses import dataclass, field, asdict
from typing import List, Optional

import pandas as pd


class Stopwatch:
    """
    Wall-clock timer based on ``time.perf_counter``.

    Usable as a context manager; ``elapsed`` holds the last measured span.
    """

    def __init__(self):
        self.elapsed = 0.0
        self._start: Optional[float] = None

    def start(self):
        self._start = time.perf_counter()

    def stop(self) -> float:
        if self._start is not None:
            self.elapsed = time.perf_counter() - self._start
            self._start = None
        return self.elapsed

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.stop()
        return False


@dataclass
class ColorManyReport:
    """Counters for one Color-Many invocation."""
    alpha: int
    palette: int
    ell_before: int
    ell_after_build: int = 0
    ell_after: int = 0
    i_alpha: int = 0
    collection_i_alpha: int = 0  # |V(C) ∩ I_alpha| after the build
    iterations: int = 0
    max_iteration_excess: int = 0  # max over iterations of (fans removed - edges colored)
    zero_progress_iterations: int = 0
    disjointness_violations: int = 0
    conservation_violations: int = 0

    @property
    def colored(self) -> int:
        return self.ell_before - self.ell_after

    def alpha_bound_holds(self) -> bool:
        """|I_alpha| >= 2l/K."""
        return self.i_alpha * self.palette >= 2 * self.ell_before

    def build_bound_holds(self) -> bool:
        """|V(C) ∩ I_alpha| + 3(l_b - l_m) >= |I_alpha|."""
        return self.collection_i_alpha + 3 * (self.ell_before - self.ell_after_build) >= self.i_alpha

    def activation_bound_holds(self) -> bool:
        """l_m - l_f >= |V(C) ∩ I_alpha| / 7."""
        return 7 * (self.ell_after_build - self.ell_after) >= self.collection_i_alpha

    def progress_bound_holds(self) -> bool:
        """Edges colored >= 2 l_b / (7K)."""
        return 7 * self.palette * self.colored >= 2 * self.ell_before

    def iteration_bound_holds(self) -> bool:
        return self.max_iteration_excess <= 6 and self.zero_progress_iterations == 0

    def all_bounds_hold(self) -> bool:
        return (self.alpha_bound_holds() and self.build_bound_holds()
                and self.activation_bound_holds() and self.progress_bound_holds()
                and self.iteration_bound_holds()
                and self.disjointness_violations == 0
                and self.conservation_violations == 0)


@dataclass
class PruneRecord:
    """One prune step: ``uncolored <= m_node * t / (target + t)`` must hold."""
    m_node: int
    d_node: int
    target: int
    t: int
    uncolored: int

    @property
    def bound(self) -> float:
        if self.t == 0:
            return 0.0
        return self.m_node * self.t / (self.target + self.t)

    @property
    def margin(self) -> float:
        return self.bound - self.uncolored

    def holds(self) -> bool:
        # Integer form of uncolored <= m t / (target + t)
        return self.uncolored * (self.target + self.t) <= self.m_node * self.t


@dataclass
class PartitionRecord:
    """Outcome of one Euler partition call."""
    m: int
    left: int
    right: int
    odd_closed_tours: int
    excess_vertices: int  # vertices above ceil(deg/2) on some side
    max_excess: int  # largest amount by which a side degree exceeds ceil(deg/2)

    def holds(self) -> bool:
        sizes_ok = {self.left, self.right} <= {self.m // 2, (self.m + 1) // 2}
        return (sizes_ok and self.left + self.right == self.m and self.max_excess <= 1
                and self.excess_vertices <= self.odd_closed_tours)


@dataclass
class RunStats:
    """
    Read-only counters collected during one coloring run.

    Attributes:
        flip_count: Number of alternating paths flipped (length-0 records included)
        flip_total: Sum of flipped path lengths
        flip_max: Longest flipped path
        fan_iterations_max: Most loop iterations of a single fan construction
        fan_bound_violations: Fan constructions exceeding deg(v) iterations
    """
    flip_count: int = 0
    flip_total: int = 0
    flip_max: int = 0
    fan_iterations_max: int = 0
    fan_bound_violations: int = 0
    color_one_calls: int = 0
    greedy_calls: int = 0
    repair_nodes: int = 0
    color_many: List[ColorManyReport] = field(default_factory=list)
    prunes: List[PruneRecord] = field(default_factory=list)
    partitions: List[PartitionRecord] = field(default_factory=list)

    def record_flip(self, length: int):
        self.flip_count += 1
        self.flip_total += length
        if length > self.flip_max:
            self.flip_max = length

    def record_fan(self, iterations: int, degree: int):
        if iterations > self.fan_iterations_max:
            self.fan_iterations_max = iterations
        if iterations > degree:
            self.fan_bound_violations += 1

    @property
    def mean_flip_length(self) -> float:
        if not self.flip_count:
            return 0.0
        return self.flip_total / self.flip_count

    @property
    def color_many_edges(self) -> int:
        return sum(report.colored for report in self.color_many)

    @property
    def min_prune_margin(self) -> float:
        margins = [record.margin for record in self.prunes if record.t > 0]
        return min(margins) if margins else math.inf

    def violations(self) -> dict:
        """Count bound violations per instrumented check."""
        return {
            'color_many': sum(not report.all_bounds_hold() for report in self.color_many),
            'prune': sum(not record.holds() for record in self.prunes),
            'partition': sum(not record.holds() for record in self.partitions),
            'fan': self.fan_bound_violations,
        }

    def to_frame(self, kind: str = 'color_many') -> pd.DataFrame:
        """
        Render one record list as a DataFrame.

        Args:
            kind: 'color_many', 'prunes' or 'partitions'
        """
        records = getattr(self, kind)
        return pd.DataFrame([asdict(record) for record in records])
