"""
Application entry points for the edge-coloring engine.
"""
