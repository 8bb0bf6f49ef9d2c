"""
Shared fixtures for the edge-coloring tests.

Run with: python -m pytest tests/ -v
"""

import sys
from pathlib import Path

import networkx as nx
import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.graph import build_graph, graph_from_networkx  # noqa: E402


@pytest.fixture
def triangle():
    """K3 with edges 0=(0,1), 1=(1,2), 2=(0,2)."""
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path4():
    """Path 0-1-2-3."""
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def cycle4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def k4():
    return graph_from_networkx(nx.complete_graph(4))


@pytest.fixture
def petersen():
    return graph_from_networkx(nx.petersen_graph())


@pytest.fixture
def multigraph():
    """Two vertices joined three times plus a pendant edge."""
    return build_graph(3, [(0, 1), (0, 1), (1, 0), (1, 2)])


@pytest.fixture
def tmp_dir(tmp_path):
    return tmp_path
