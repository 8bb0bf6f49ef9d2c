"""
Edge-list and coloring file formats.

Edge lists start with ``ec <n> <m>`` followed by m lines ``<u> <v>`` with
0-based vertex ids. Colorings are m lines ``<edge-index> <color>`` with
1-based colors. ``#`` starts a comment anywhere on a line.
"""

from pathlib import Path
from typing import List, Sequence, Tuple

from src.utils.config import COMMENT_PREFIX, EDGE_LIST_HEADER, UNCOLORED
from src.utils.exceptions import FileOperationError, MissingEdgesError, ParseError
from src.utils.logging_config import log_info


def _content_lines(text: str):
    """Yield (line number, fields) for every non-comment, non-blank line."""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(COMMENT_PREFIX, 1)[0].strip()
        if line:
            yield line_no, line.split()


def _parse_int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line_no)


def parse_edge_list(text: str) -> Tuple[int, List[Tuple[int, int]]]:
    """
    Parse edge-list text.

    Args:
        text: File contents

    Returns:
        (n, edges) with edges in input order

    Raises:
        ParseError: On a missing/malformed header, bad lines or a wrong edge count
    """
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise ParseError("empty edge list")
    line_no, fields = header
    if len(fields) != 3 or fields[0] != EDGE_LIST_HEADER:
        raise ParseError(f"expected '{EDGE_LIST_HEADER} <n> <m>' header", line_no)
    n = _parse_int(fields[1], line_no, "n")
    m = _parse_int(fields[2], line_no, "m")
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", line_no)

    edges: List[Tuple[int, int]] = []
    for line_no, fields in lines:
        if len(fields) != 2:
            raise ParseError(f"expected '<u> <v>', got {' '.join(fields)!r}", line_no)
        edges.append((_parse_int(fields[0], line_no, "u"), _parse_int(fields[1], line_no, "v")))

    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return n, edges


def format_edge_list(n: int, edges: Sequence[Tuple[int, int]], comment: str = "") -> str:
    """Render (n, edges) in the edge-list format."""
    out = []
    if comment:
        out.append(f"{COMMENT_PREFIX} {comment}")
    out.append(f"{EDGE_LIST_HEADER} {n} {len(edges)}")
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def parse_coloring(text: str, m: int) -> List[int]:
    """
    Parse coloring text for a graph with m edges.

    Raises:
        ParseError: On malformed lines, out-of-range indices or duplicates
        MissingEdgesError: When some edge index has no line
    """
    colors = [None] * m
    for line_no, fields in _content_lines(text):
        if len(fields) != 2:
            raise ParseError(f"expected '<edge-index> <color>', got {' '.join(fields)!r}", line_no)
        index = _parse_int(fields[0], line_no, "edge index")
        color = _parse_int(fields[1], line_no, "color")
        if not 0 <= index < m:
            raise ParseError(f"edge index {index} outside [0, {m})", line_no)
        if color < UNCOLORED:
            raise ParseError(f"negative color {color}", line_no)
        if colors[index] is not None:
            raise ParseError(f"edge {index} listed twice", line_no)
        colors[index] = color

    missing = [index for index, color in enumerate(colors) if color is None]
    if missing:
        preview = ", ".join(str(index) for index in missing[:10])
        raise MissingEdgesError(f"{len(missing)} edge(s) have no color line: {preview}")
    return colors


def format_coloring(colors: Sequence[int]) -> str:
    """Render per-edge colors as ``<edge-index> <color>`` lines."""
    return "".join(f"{index} {color}\n" for index, color in enumerate(colors))


def read_text(path: str) -> str:
    """
    Load text from a file.

    Raises:
        FileOperationError: If the file is missing or unreadable
    """
    filepath = Path(path)
    if not filepath.exists():
        raise FileOperationError(f"File not found: {path}")
    try:
        return filepath.read_text(encoding='utf-8')
    except PermissionError:
        raise FileOperationError(f"Permission denied: {path}")
    except OSError as e:
        raise FileOperationError(f"Failed to load file: {e}")


def write_text(path: str, text: str) -> None:
    """
    Write text to a file, creating parent directories.

    Raises:
        FileOperationError: If the file cannot be written
    """
    filepath = Path(path)
    try:
        filepath.parent.mkdir(parents=True, exist_ok=True)
        filepath.write_text(text, encoding='utf-8')
    except PermissionError:
        raise FileOperationError(f"Permission denied: {path}")
    except OSError as e:
        raise FileOperationError(f"Failed to save file: {e}")
    log_info(f"Wrote {filepath}")


def load_edge_list(path: str) -> Tuple[int, List[Tuple[int, int]]]:
    """Read and parse an edge-list file."""
    return parse_edge_list(read_text(path))


def save_edge_list(path: str, n: int, edges: Sequence[Tuple[int, int]], comment: str = "") -> None:
    write_text(path, format_edge_list(n, edges, comment))


def load_coloring(path: str, m: int) -> List[int]:
    """Read and parse a coloring file for a graph with m edges."""
    return parse_coloring(read_text(path), m)


def save_coloring(path: str, colors: Sequence[int]) -> None:
    write_text(path, format_coloring(colors))
