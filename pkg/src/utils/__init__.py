"""
Utility modules for configuration, exceptions, file operations, and performance monitoring.
"""

from src.utils.config import *
from src.utils.exceptions import (
    EdgeColoringError,
    GraphError,
    NotSimpleError,
    ParseError,
    MissingEdgesError,
    FileOperationError,
    ConfigError,
    InvalidParamsError,
    ColoringStateError,
    CollectionInvariantError,
    TooLargeError
)
from src.utils.file_utils import load_edge_list, save_edge_list, load_coloring, save_coloring
from src.utils.performance_monitor import Stopwatch, RunStats, ColorManyReport, PruneRecord, PartitionRecord
from src.utils.settings import load_settings, save_settings, CampaignConfig, load_campaign_config

__all__ = [
    # Exceptions
    'EdgeColoringError',
    'GraphError',
    'NotSimpleError',
    'ParseError',
    'MissingEdgesError',
    'FileOperationError',
    'ConfigError',
    'InvalidParamsError',
    'ColoringStateError',
    'CollectionInvariantError',
    'TooLargeError',
    # File utilities
    'load_edge_list',
    'save_edge_list',
    'load_coloring',
    'save_coloring',
    # Performance
    'Stopwatch',
    'RunStats',
    'ColorManyReport',
    'PruneRecord',
    'PartitionRecord',
    # Settings
    'load_settings',
    'save_settings',
    'CampaignConfig',
    'load_campaign_config'
]
