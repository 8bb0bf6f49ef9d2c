"""
Edge Coloring Engine - recursive Euler-partition edge coloring.

This package colors the edges of multigraphs with 2d - 1 colors and of
simple graphs with d + 1 colors, and ships a validator, an exact oracle for
small graphs, seeded generators and a benchmark harness.
"""

__version__ = "1.0.0"
__author__ = "Shanmukh"
