"""
Core modules: graphs, coloring state, fans, repairs and the recursive drivers.
"""

from src.core.graph import Graph, build_graph, graph_from_networkx
from src.core.pair_dictionary import PairDictionary, DirectDictionary, make_dictionary
from src.core.coloring_state import ColoringState, MissingTracker
from src.core.euler_partition import Partition, euler_partition
from src.core.fans import PrimedCFan, UFan, FlipRecord, flip_path, make_primed_fan
from src.core.repair import greedy_color, color_one, random_color_one
from src.core.color_many import AlphaCollection, CollectionEvent, choose_alpha, color_many
from src.core.drivers import (
    ColoringResult,
    RecursionNode,
    prune,
    greedy_euler_color,
    euler_color,
    random_euler_color,
    greedy_color_all,
    vizing_color,
    color_graph
)
from src.core.verify import ValidationReport, verify_coloring, chromatic_index_oracle
from src.core.generators import generate, generate_graph

__all__ = [
    # Graphs
    'Graph',
    'build_graph',
    'graph_from_networkx',
    # State
    'PairDictionary',
    'DirectDictionary',
    'make_dictionary',
    'ColoringState',
    'MissingTracker',
    # Partition
    'Partition',
    'euler_partition',
    # Fans and repairs
    'PrimedCFan',
    'UFan',
    'FlipRecord',
    'flip_path',
    'make_primed_fan',
    'greedy_color',
    'color_one',
    'random_color_one',
    'AlphaCollection',
    'CollectionEvent',
    'choose_alpha',
    'color_many',
    # Drivers
    'ColoringResult',
    'RecursionNode',
    'prune',
    'greedy_euler_color',
    'euler_color',
    'random_euler_color',
    'greedy_color_all',
    'vizing_color',
    'color_graph',
    # Verification
    'ValidationReport',
    'verify_coloring',
    'chromatic_index_oracle',
    # Generators
    'generate',
    'generate_graph'
]
