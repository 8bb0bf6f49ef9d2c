"""
Benchmark campaigns: generate, color, re-verify and time every combination
of a campaign config, one CSV row per run.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional

import pandas as pd

from src.core.drivers import color_graph
from src.core.generators import generate_graph
from src.core.verify import verify_coloring
from src.utils.config import (
    ALGO_GREEDY,
    ALGO_GREEDY_DIRECT,
    BACKEND_TWO_LEVEL,
    BENCH_COLUMNS,
    FAMILY_GNM,
    FAMILY_MULTIGRAPH,
    FAMILY_REGULAR,
    SIMPLE_ONLY_ALGORITHMS,
    STATUS_ILLEGAL,
    STATUS_LEGAL,
    palette_budget,
)
from src.utils.exceptions import FileOperationError
from src.utils.logging_config import log_info, log_warning
from src.utils.settings import CampaignConfig


@dataclass(frozen=True)
class BenchJob:
    """One run of a campaign."""
    family: str
    n: int
    m: Optional[int]
    degree: Optional[int]
    algorithm: str
    seed: int
    repetition: int
    backend: str = BACKEND_TWO_LEVEL


def scaling_stat(algorithm: str, seconds: float, n: int, m: int, d: int) -> float:
    """time / (m sqrt n) for the (d+1) drivers, time / (m log d) for the greedy ones."""
    if algorithm in (ALGO_GREEDY, ALGO_GREEDY_DIRECT):
        return seconds / (m * max(1.0, math.log2(max(d, 2))))
    return seconds / (m * math.sqrt(n))


def campaign_jobs(config: CampaignConfig, backend: str = BACKEND_TWO_LEVEL) -> List[BenchJob]:
    """Expand a campaign into jobs; multigraph families skip the simple-only drivers."""
    jobs = []
    for family in config.families:
        degrees = config.degrees if family == FAMILY_REGULAR and config.degrees else [None]
        for n in config.sizes:
            m = config.m_factor * n
            if family == FAMILY_GNM:
                m = min(m, n * (n - 1) // 2)
            for degree in degrees:
                for algorithm in config.algorithms:
                    if family == FAMILY_MULTIGRAPH and algorithm in SIMPLE_ONLY_ALGORITHMS:
                        continue
                    for seed in config.seeds:
                        for repetition in range(config.repetitions):
                            jobs.append(BenchJob(family, n, m, degree,
                                                 algorithm, seed, repetition, backend))
    skipped = [a for a in config.algorithms if a in SIMPLE_ONLY_ALGORITHMS]
    if FAMILY_MULTIGRAPH in config.families and skipped:
        log_warning(f"{FAMILY_MULTIGRAPH} is not simple; skipping {', '.join(skipped)} on it")
    return jobs


def run_job(job: BenchJob) -> Dict:
    """Run one job and return its CSV row. Graph generation is not timed."""
    graph = generate_graph(job.family, job.n, job.m, job.degree, job.seed)
    result = color_graph(graph, job.algorithm, seed=job.seed, backend=job.backend)
    report = verify_coloring(graph, result.colors, palette_budget(job.algorithm, graph.max_degree))
    stats = result.stats
    return {
        'family': job.family,
        'n': graph.n,
        'm': graph.m,
        'd': graph.max_degree,
        'algorithm': job.algorithm,
        'seed': job.seed,
        'repetition': job.repetition,
        'wall_time': result.elapsed,
        'colors_used': report.colors_used,
        'color_many_edges': stats.color_many_edges,
        'mean_flip_length': stats.mean_flip_length,
        'prune_margin': stats.min_prune_margin,
        'status': STATUS_LEGAL if report.ok else STATUS_ILLEGAL,
        'scaling_stat': scaling_stat(job.algorithm, result.elapsed, graph.n, graph.m, graph.max_degree),
    }


def run_campaign(config: CampaignConfig, backend: str = BACKEND_TWO_LEVEL,
                 workers: Optional[int] = None) -> pd.DataFrame:
    """
    Run every job of a campaign.

    Args:
        config: Parsed campaign
        backend: Pair dictionary backend for every run
        workers: Process count (defaults to config.workers)

    Returns:
        DataFrame with BENCH_COLUMNS, one row per job in job order
    """
    jobs = [] if config.is_empty() else campaign_jobs(config, backend)
    workers = workers or config.workers
    log_info(f"Campaign: {len(jobs)} runs on {workers} worker(s)")
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run_job, jobs))
    else:
        rows = [run_job(job) for job in jobs]

    frame = pd.DataFrame(rows, columns=BENCH_COLUMNS)
    illegal = int((frame['status'] != STATUS_LEGAL).sum()) if len(frame) else 0
    if illegal:
        log_warning(f"{illegal} run(s) failed verification")
    return frame


def summarize(frame: pd.DataFrame) -> pd.DataFrame:
    """
    Spread of the scaling statistic across sizes, per family and algorithm.

    Legal runs only. The per-size value is the median over seeds and
    repetitions; ``max_over_median`` and ``spread`` (max / min) compare those
    medians across the size ladder.
    """
    columns = ['family', 'algorithm', 'sizes', 'max_over_median', 'spread']
    legal = frame[frame['status'] == STATUS_LEGAL]
    if legal.empty:
        return pd.DataFrame(columns=columns)
    per_size = legal.groupby(['family', 'algorithm', 'n'])['scaling_stat'].median().reset_index()
    rows = []
    for (family, algorithm), group in per_size.groupby(['family', 'algorithm']):
        values = group['scaling_stat']
        rows.append({
            'family': family,
            'algorithm': algorithm,
            'sizes': len(values),
            'max_over_median': float(values.max() / values.median()) if values.median() > 0 else math.nan,
            'spread': float(values.max() / values.min()) if values.min() > 0 else math.nan,
        })
    return pd.DataFrame(rows, columns=columns)


def write_csv(frame: pd.DataFrame, path: str):
    """Write the campaign table; an empty campaign writes the header only."""
    try:
        frame.to_csv(path, index=False)
    except OSError as e:
        raise FileOperationError(f"Failed to write {path}: {e}")
    log_info(f"Wrote {len(frame)} row(s) to {path}")
