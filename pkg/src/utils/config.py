"""
Configuration constants for the edge-coloring engine.

This module contains the fixed constants shared by the engine, the CLI and
the benchmark harness: color sentinels, algorithm names and palette budgets,
file format tokens, generator families and benchmark schema.
"""

# === Colors ===
UNCOLORED = 0  # Sentinel for an edge without a color; real colors are 1..K
EMPTY_SLOT = -1  # Empty dictionary cell / empty linked-list pointer

# === Algorithms ===
ALGO_GREEDY = "greedy"
ALGO_EULER = "euler"
ALGO_RANDOM_EULER = "random-euler"
ALGO_GREEDY_DIRECT = "greedy-direct"  # Greedy-Color on the whole graph, no recursion
ALGO_VIZING = "vizing"  # Color-One on the whole graph, no recursion

ALGORITHMS = (ALGO_GREEDY, ALGO_EULER, ALGO_RANDOM_EULER, ALGO_GREEDY_DIRECT, ALGO_VIZING)
SIMPLE_ONLY_ALGORITHMS = (ALGO_EULER, ALGO_RANDOM_EULER, ALGO_VIZING)


def palette_budget(algorithm: str, d: int) -> int:
    """Number of colors #c(d) an algorithm may use on a graph of max degree d."""
    if algorithm in (ALGO_GREEDY, ALGO_GREEDY_DIRECT):
        return max(1, 2 * d - 1)
    return d + 1


# === Edge-list format ===
EDGE_LIST_HEADER = "ec"  # First line: "ec <n> <m>"
COMMENT_PREFIX = "#"

# === Dictionary backends ===
BACKEND_TWO_LEVEL = "two-level"
BACKEND_DIRECT = "direct"
BACKEND_AUTO = "auto"
DICTIONARY_BACKENDS = (BACKEND_TWO_LEVEL, BACKEND_DIRECT, BACKEND_AUTO)

# === Generator families ===
FAMILY_GNM = "gnm-random-simple"
FAMILY_MULTIGRAPH = "random-multigraph"
FAMILY_COMPLETE = "complete"
FAMILY_STAR = "star"
FAMILY_CYCLE = "cycle"
FAMILY_PATH = "path"
FAMILY_BIPARTITE = "bipartite-complete"
FAMILY_REGULAR = "random-regular-ish"

GENERATOR_FAMILIES = (
    FAMILY_GNM, FAMILY_MULTIGRAPH, FAMILY_COMPLETE, FAMILY_STAR,
    FAMILY_CYCLE, FAMILY_PATH, FAMILY_BIPARTITE, FAMILY_REGULAR,
)
MAX_RESAMPLE_ATTEMPTS = 64  # Edge re-samples tried per isolated vertex of a random graph

# === Oracle ===
ORACLE_MAX_VERTICES = 10  # Backtracking is exponential beyond this

# === Random-Color-One flip length ===
FLIP_LENGTH_TOLERANCE = 1.10  # Mean flip length may exceed m(d+1)/l by this factor

# === Benchmark ===
BENCH_COLUMNS = [
    'family', 'n', 'm', 'd', 'algorithm', 'seed', 'repetition',
    'wall_time', 'colors_used', 'color_many_edges', 'mean_flip_length',
    'prune_margin', 'status', 'scaling_stat',
]
STATUS_LEGAL = "legal"
STATUS_ILLEGAL = "illegal"

# === CLI exit codes ===
EXIT_OK = 0
EXIT_INVALID = 1  # Coloring failed verification
EXIT_USAGE = 2  # Usage, parse or config error
