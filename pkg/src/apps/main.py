"""
Edge Coloring Engine - Command Line

Subcommands:
- gen:    write a generated graph in the edge-list format
- color:  color an edge-list file with one of the drivers
- verify: check a coloring file against its graph and a color budget
- bench:  run a benchmark campaign and write its CSV

Exit codes: 0 success, 1 failed verification, 2 usage, parse or config error.
"""

import argparse
import sys
from typing import List, Optional

from src.apps.bench import run_campaign, summarize, write_csv
from src.core.drivers import color_graph
from src.core.generators import FAMILY_PARAMETERS, generate
from src.core.graph import build_graph
from src.core.verify import verify_coloring
from src.utils.config import (
    ALGO_GREEDY,
    ALGORITHMS,
    DICTIONARY_BACKENDS,
    EXIT_INVALID,
    EXIT_OK,
    EXIT_USAGE,
    GENERATOR_FAMILIES,
    UNCOLORED,
    palette_budget,
)
from src.utils.exceptions import (
    ConfigError,
    FileOperationError,
    GraphError,
    InvalidParamsError,
    MissingEdgesError,
    ParseError,
)
from src.utils.file_utils import (
    format_coloring,
    format_edge_list,
    load_coloring,
    load_edge_list,
    save_coloring,
    save_edge_list,
)
from src.utils.logging_config import LEVELS, attach_log_file, log_error, log_info, set_log_level
from src.utils.settings import get_log_file_path, load_campaign_config, load_settings

# Errors that mean the input was unusable rather than the coloring wrong
USAGE_ERRORS = (ParseError, GraphError, InvalidParamsError, ConfigError,
                MissingEdgesError, FileOperationError)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edge-coloring",
                                     description="Recursive Euler-partition edge coloring")
    parser.add_argument('--log-level', choices=sorted(LEVELS), type=str.upper, default=None,
                        help="Override the log_level setting")
    commands = parser.add_subparsers(dest='command', required=True)

    gen = commands.add_parser('gen', help="Generate a graph",
                              formatter_class=argparse.RawDescriptionHelpFormatter,
                              epilog="parameters per family:\n" + "\n".join(
                                  f"  {family}: {params}" for family, params in FAMILY_PARAMETERS.items()))
    gen.add_argument('--family', required=True, choices=GENERATOR_FAMILIES)
    gen.add_argument('--n', type=int, required=True, help="Vertex count")
    gen.add_argument('--m', type=int, default=None, help="Edge count (random families)")
    gen.add_argument('--degree', type=int, default=None, help="Degree (random-regular-ish)")
    gen.add_argument('--seed', type=int, default=None)
    gen.add_argument('--out', default=None, help="Output file (stdout if omitted)")

    color = commands.add_parser('color', help="Color an edge-list file")
    color.add_argument('input')
    color.add_argument('--algorithm', choices=ALGORITHMS, default=ALGO_GREEDY)
    color.add_argument('--seed', type=int, default=None)
    color.add_argument('--out', default=None, help="Coloring file (stdout if omitted)")
    color.add_argument('--backend', choices=DICTIONARY_BACKENDS, default=None)
    color.add_argument('--debug', action='store_true', help="Audit the state after every repair")

    verify = commands.add_parser('verify', help="Verify a coloring file")
    verify.add_argument('graph')
    verify.add_argument('coloring')
    verify.add_argument('--budget', type=int, default=None, help="Maximum number of colors")

    bench = commands.add_parser('bench', help="Run a benchmark campaign")
    bench.add_argument('--config', required=True, help="Campaign config file")
    bench.add_argument('--out', default=None, help="CSV path (overrides the config)")
    bench.add_argument('--workers', type=int, default=None)
    bench.add_argument('--backend', choices=DICTIONARY_BACKENDS, default=None)
    return parser


def cmd_gen(args, settings) -> int:
    seed = args.seed if args.seed is not None else settings['default_seed']
    n, edges = generate(args.family, args.n, args.m, args.degree, seed)
    comment = f"{args.family} seed={seed}"
    if args.out:
        save_edge_list(args.out, n, edges, comment)
    else:
        sys.stdout.write(format_edge_list(n, edges, comment))
    log_info(f"Generated {args.family}: n={n} m={len(edges)}")
    return EXIT_OK


def cmd_color(args, settings) -> int:
    n, edges = load_edge_list(args.input)
    graph = build_graph(n, edges)
    seed = args.seed if args.seed is not None else settings['default_seed']
    backend = args.backend or settings['dictionary_backend']
    result = color_graph(graph, args.algorithm, seed=seed, backend=backend,
                         debug=args.debug or settings['debug_checks'])
    if args.out:
        save_coloring(args.out, result.colors)
    else:
        sys.stdout.write(format_coloring(result.colors))

    uncolored = sum(1 for gamma in result.colors if gamma == UNCOLORED)
    print(f"colors used: {result.num_colors} (budget {palette_budget(args.algorithm, graph.max_degree)}), "
          f"uncolored: {uncolored}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args, settings) -> int:
    n, edges = load_edge_list(args.graph)
    graph = build_graph(n, edges)
    colors = load_coloring(args.coloring, graph.m)
    report = verify_coloring(graph, colors, args.budget)
    print(report.to_json())
    if not report.legal:
        log_error(f"Coloring is not legal: {len(report.violations)} conflict(s)")
    elif not report.within_budget:
        log_error(f"Coloring uses {report.colors_used} colors, budget {args.budget}")
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_bench(args, settings) -> int:
    config = load_campaign_config(args.config)
    out = args.out or config.out
    if not out:
        raise ConfigError("No output CSV: set 'out' in the config or pass --out")
    workers = args.workers or (config.workers if config.workers > 1 else settings['bench_workers'])
    frame = run_campaign(config, backend=args.backend or settings['dictionary_backend'], workers=workers)
    write_csv(frame, out)
    summary = summarize(frame)
    if not summary.empty:
        print(summary.to_string(index=False))
    return EXIT_OK


COMMANDS = {'gen': cmd_gen, 'color': cmd_color, 'verify': cmd_verify, 'bench': cmd_bench}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and run one subcommand.

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    settings = load_settings()
    set_log_level(args.log_level or settings['log_level'])
    log_file = get_log_file_path()
    if log_file:
        attach_log_file(log_file)

    try:
        return COMMANDS[args.command](args, settings)
    except USAGE_ERRORS as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
