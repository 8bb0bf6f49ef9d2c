"""
Acceptance Sweep Tool

Runs the correctness sweep over every generator family and checks the
instrumented bounds every run records: Color-Many progress, prune and
Euler partition contracts. Optionally measures the mean flipped-path length
of Random-Color-One on frozen states and the runtime spread of the
randomized driver over many seeds.

Usage:
    python tools/acceptance_sweep.py
    python tools/acceptance_sweep.py --sizes 4,8,16,32,64,1000 --seeds 10 --out sweep.csv
    python tools/acceptance_sweep.py --flip-states 20 --flip-trials 10000
    python tools/acceptance_sweep.py --concentration-seeds 100 --concentration-n 10000
"""

import argparse
import os
import random
import statistics
import sys
from typing import Dict, List

import pandas as pd

SCRIPT_DIR = os.path.dirname(os.path.abspath(__file__))
PROJECT_ROOT = os.path.dirname(SCRIPT_DIR)
sys.path.insert(0, PROJECT_ROOT)

from src.core.drivers import color_graph, euler_color, random_euler_color  # noqa: E402
from src.core.generators import generate_graph  # noqa: E402
from src.core.repair import random_color_one  # noqa: E402
from src.core.verify import verify_coloring  # noqa: E402
from src.utils.config import (  # noqa: E402
    ALGO_EULER,
    ALGO_GREEDY,
    ALGO_RANDOM_EULER,
    FAMILY_BIPARTITE,
    FAMILY_COMPLETE,
    FAMILY_GNM,
    FLIP_LENGTH_TOLERANCE,
    GENERATOR_FAMILIES,
    palette_budget,
)
from src.utils.logging_config import log_info, log_warning, set_log_level  # noqa: E402
from src.utils.performance_monitor import Stopwatch  # noqa: E402

# complete and bipartite-complete have ~n^2/2 edges
DENSE_FAMILIES = (FAMILY_COMPLETE, FAMILY_BIPARTITE)
DENSE_MAX_N = 64


def correctness_sweep(sizes: List[int], seeds: int) -> pd.DataFrame:
    """One row per (family, n, seed, algorithm) with legality and bound violations."""
    rows = []
    for family in GENERATOR_FAMILIES:
        for n in sizes:
            if family in DENSE_FAMILIES and n > DENSE_MAX_N:
                continue
            for seed in range(seeds):
                graph = generate_graph(family, n, seed=seed)
                algorithms = [ALGO_GREEDY]
                if graph.is_simple:
                    algorithms += [ALGO_EULER, ALGO_RANDOM_EULER]
                for algorithm in algorithms:
                    result = color_graph(graph, algorithm, seed=seed)
                    budget = palette_budget(algorithm, graph.max_degree)
                    report = verify_coloring(graph, result.colors, budget)
                    violations = result.stats.violations()
                    rows.append({
                        'family': family, 'n': graph.n, 'm': graph.m, 'd': graph.max_degree,
                        'seed': seed, 'algorithm': algorithm,
                        'legal': report.legal, 'colors_used': report.colors_used, 'budget': budget,
                        'color_many_calls': len(result.stats.color_many),
                        'color_many_violations': violations['color_many'],
                        'prune_violations': violations['prune'],
                        'partition_violations': violations['partition'],
                        'fan_violations': violations['fan'],
                    })
    return pd.DataFrame(rows)


def flip_length_check(states: int, trials: int, n: int = 200, seed: int = 0) -> pd.DataFrame:
    """
    Mean flipped-path length of Random-Color-One on frozen post-prune states.

    Every recursion node with uncolored edges after its prune is one state,
    until ``states`` have been measured. Each trial restores the state and
    colors one edge with its own seed.
    """
    rows: List[Dict] = []

    def measure(state, node):
        if len(rows) >= states or state.ell == 0:
            return
        frozen = state.snapshot()
        lengths = []
        for trial in range(trials):
            state.restore(frozen)
            before = state.stats.flip_total
            random_color_one(state, random.Random(trial))
            lengths.append(state.stats.flip_total - before)
        state.restore(frozen)
        bound = node.m_node * (node.d_node + 1) / state.ell
        mean = statistics.fmean(lengths)
        rows.append({'m_node': node.m_node, 'd_node': node.d_node, 'ell': state.ell,
                     'mean_flip_length': mean, 'bound': bound,
                     'holds': mean <= FLIP_LENGTH_TOLERANCE * bound})

    attempt = seed
    while len(rows) < states and attempt < seed + 100:
        graph = generate_graph(FAMILY_GNM, n, m=4 * n, seed=attempt)
        euler_color(graph, on_repair=measure)
        attempt += 1
    return pd.DataFrame(rows)


def concentration_proxy(n: int, seeds: int) -> float:
    """max / median runtime of random-euler over seeds on one fixed graph."""
    graph = generate_graph(FAMILY_GNM, n, m=4 * n, seed=0)
    times = []
    for seed in range(seeds):
        with Stopwatch() as watch:
            random_euler_color(graph, seed=seed)
        times.append(watch.elapsed)
    return max(times) / statistics.median(times)


def main():
    parser = argparse.ArgumentParser(description="Acceptance sweep for the edge-coloring engine")
    parser.add_argument('--sizes', default="4,8,16,32,64")
    parser.add_argument('--seeds', type=int, default=10)
    parser.add_argument('--flip-states', type=int, default=0)
    parser.add_argument('--flip-trials', type=int, default=10000)
    parser.add_argument('--concentration-seeds', type=int, default=0)
    parser.add_argument('--concentration-n', type=int, default=10000)
    parser.add_argument('--out', default=None, help="CSV for the sweep rows")
    args = parser.parse_args()
    set_log_level('WARNING')

    sizes = [int(size) for size in args.sizes.split(',') if size.strip()]
    sweep = correctness_sweep(sizes, args.seeds)
    failures = sweep[~sweep['legal'] | (sweep['colors_used'] > sweep['budget'])]
    bound_columns = ['color_many_violations', 'prune_violations', 'partition_violations', 'fan_violations']
    print(f" Sweep: {len(sweep)} runs, {len(failures)} illegal or over budget")
    for column in bound_columns:
        print(f"   {column}: {int(sweep[column].sum())}")
    if args.out:
        sweep.to_csv(args.out, index=False)
        print(f" Wrote {args.out}")

    ok = failures.empty and not sweep[bound_columns].to_numpy().any()

    if args.flip_states:
        flips = flip_length_check(args.flip_states, args.flip_trials)
        print(f" Flip-length check: {len(flips)} states, {int((~flips['holds']).sum())} above bound")
        ok = ok and bool(flips['holds'].all())

    if args.concentration_seeds:
        ratio = concentration_proxy(args.concentration_n, args.concentration_seeds)
        print(f" Concentration: max/median runtime = {ratio:.2f}")
        ok = ok and ratio <= 3

    if ok:
        log_info("All acceptance checks passed")
    else:
        log_warning("Some acceptance checks failed")
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
