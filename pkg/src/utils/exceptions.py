"""
Custom exceptions for the edge-coloring engine.

This module defines a hierarchy of custom exceptions for better error handling
and more specific error messages throughout the engine.
"""


class EdgeColoringError(Exception):
    """Base exception for all edge-coloring engine errors."""
    pass


# === Graph construction ===

class GraphError(EdgeColoringError):
    """Raised when an edge list does not describe a valid input graph."""
    pass


class SelfLoopError(GraphError):
    """Raised when an edge joins a vertex to itself."""

    def __init__(self, edge: int, vertex: int):
        super().__init__(f"Edge {edge} is a self-loop at vertex {vertex}")
        self.edge = edge
        self.vertex = vertex


class IsolatedVertexError(GraphError):
    """Raised when a vertex has no incident edge."""

    def __init__(self, vertex: int):
        super().__init__(f"Vertex {vertex} is isolated")
        self.vertex = vertex


class VertexOutOfRangeError(GraphError):
    """Raised when an edge names a vertex outside [0, n)."""

    def __init__(self, edge: int, vertex: int, n: int):
        super().__init__(f"Edge {edge} names vertex {vertex}, outside [0, {n})")
        self.edge = edge
        self.vertex = vertex


class NotSimpleError(GraphError):
    """Raised when a simple graph is required but parallel edges exist."""
    pass


# === Files and formats ===

class FileOperationError(EdgeColoringError):
    """Raised when file save/load operations fail."""
    pass


class ParseError(EdgeColoringError):
    """Raised when an edge-list, coloring or config file is malformed."""

    def __init__(self, message: str, line: int = 0):
        if line:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MissingEdgesError(EdgeColoringError):
    """Raised when a coloring file does not cover every edge of the graph."""
    pass


class ConfigError(EdgeColoringError):
    """Raised when a campaign config has unknown keys or bad values."""
    pass


class InvalidParamsError(EdgeColoringError):
    """Raised when generator or CLI parameters are out of range."""
    pass


# === Coloring state ===

class ColoringStateError(EdgeColoringError):
    """Base class for misuse of a ColoringState."""
    pass


class AlreadyColoredError(ColoringStateError):
    """Raised when coloring an edge that already has a color."""

    def __init__(self, edge: int, color: int):
        super().__init__(f"Edge {edge} is already colored {color}")
        self.edge = edge


class NotColoredError(ColoringStateError):
    """Raised when uncoloring an edge that has no color."""

    def __init__(self, edge: int):
        super().__init__(f"Edge {edge} is not colored")
        self.edge = edge


class ColorConflictError(ColoringStateError):
    """Raised when a color is not missing at an endpoint. Always a bug."""

    def __init__(self, edge: int, vertex: int, color: int, other: int):
        super().__init__(
            f"Color {color} on edge {edge} clashes with edge {other} at vertex {vertex}"
        )
        self.edge = edge
        self.vertex = vertex
        self.color = color
        self.other = other


class InvalidColorError(ColoringStateError, ValueError):
    """Raised when a color lies outside the bound palette [1, K]."""
    pass


class NoUncoloredEdgesError(ColoringStateError):
    """Raised when an uncolored edge is requested but none is left."""
    pass


class ScopeNotEmptyError(ColoringStateError):
    """Raised when binding a scope while another one is still bound."""
    pass


class ScopeError(ColoringStateError):
    """Raised when an edge or vertex outside the bound scope is used."""
    pass


class StateAuditError(ColoringStateError):
    """Raised when a structure diverges from its brute-force recomputation."""

    def __init__(self, divergences: list):
        preview = "; ".join(divergences[:5])
        super().__init__(f"{len(divergences)} divergence(s): {preview}")
        self.divergences = divergences


# === Pair dictionary ===

class DictionaryError(EdgeColoringError):
    """Base class for pair dictionary contract violations."""
    pass


class DuplicateKeyError(DictionaryError):
    """Raised when inserting a (vertex, color) key that is already present."""
    pass


class DictionaryFullError(DictionaryError):
    """Raised when more than M entries would be stored."""
    pass


class KeyRangeError(DictionaryError, ValueError):
    """Raised when a key index falls outside the dictionary universe."""
    pass


# === Fans and paths ===

class FanError(EdgeColoringError):
    """Base class for fan and alternating path contract violations."""
    pass


class InvalidFanError(FanError):
    """Raised when a fan does not satisfy its definition against the state."""
    pass


class NotPathEndpointError(FanError):
    """Raised when flipping from a vertex interior to its alternating path."""
    pass


class CollectionInvariantError(EdgeColoringError):
    """Raised when an alpha-collection breaks one of its invariants. Always a bug."""
    pass


# === Verification ===

class TooLargeError(EdgeColoringError):
    """Raised when the brute-force oracle is asked about a graph that is too big."""
    pass
