"""
Dictionaries mapping a (vertex, color) pair to the edge at that vertex with that color.

The two-level structure splits the key universe of size U = n * stride into
ranges of b = ceil(sqrt(U / M)) consecutive indices. A top array holds, per
range, either nothing or a handle to one of M block arrays of length b, and
a counter of live entries in the range. Blocks come from and return to a
free list, so initialization writes O(U/b + M*b) = O(sqrt(U*M)) cells while
search, insert and delete stay O(1).

Key index of (v, gamma) is v * stride + gamma with 1 <= gamma <= stride.
"""

import math
from typing import List, Optional, Tuple

from src.utils.config import BACKEND_AUTO, BACKEND_DIRECT, BACKEND_TWO_LEVEL, EMPTY_SLOT
from src.utils.exceptions import DictionaryFullError, DuplicateKeyError, KeyRangeError


def block_size_for(universe: int, capacity: int) -> int:
    """Smallest b >= 1 with b*b*capacity >= universe, i.e. ceil(sqrt(U/M))."""
    quotient = -(-universe // capacity)
    b = math.isqrt(quotient)
    if b * b < quotient:
        b += 1
    return max(1, b)


class PairDictionary:
    """
    Two-level (vertex, color) -> edge dictionary with O(sqrt(UM)) initialization.

    Attributes:
        universe: U = n * stride
        capacity: M, the maximum number of live entries
        block_size: b
        num_ranges: Number of top-array slots
        cells_written: Memory cells written during construction
    """

    def __init__(self, n: int, stride: int, capacity: int):
        """
        Args:
            n: Vertex count of the top-level graph
            stride: Largest color ever stored (d_top + 1 for the (d+1) algorithms)
            capacity: M, typically twice the top-level edge count
        """
        self.n = n
        self.stride = max(1, stride)
        self.universe = n * self.stride
        self.capacity = max(1, capacity)
        self.block_size = block_size_for(self.universe, self.capacity)
        # Index U itself is a valid key: (n - 1, stride) maps to U, with stride = d_top + 1
        # for the (d+1) drivers. So U + 1 indices are covered, and n=8, stride=4, b=2 gives
        # 17 ranges rather than U / b = 16.
        self.num_ranges = -(-(self.universe + 1) // self.block_size)

        self._top: List[int] = [EMPTY_SLOT] * self.num_ranges
        self._counts: List[int] = [0] * self.num_ranges
        self._cells: List[int] = [EMPTY_SLOT] * (self.capacity * self.block_size)
        self._free: List[int] = list(range(self.capacity - 1, -1, -1))
        self._size = 0

        self.cells_written = (2 * self.num_ranges
                              + self.capacity * self.block_size
                              + self.capacity)

    def _index(self, v: int, gamma: int) -> int:
        if not (0 <= v < self.n and 1 <= gamma <= self.stride):
            raise KeyRangeError(f"Key ({v}, {gamma}) outside n={self.n}, colors 1..{self.stride}")
        return v * self.stride + gamma

    def locate(self, v: int, gamma: int) -> Tuple[int, int]:
        """Range number k and in-block offset j of a key."""
        return divmod(self._index(v, gamma), self.block_size)

    def search(self, v: int, gamma: int) -> Optional[int]:
        k, j = divmod(self._index(v, gamma), self.block_size)
        block = self._top[k]
        if block == EMPTY_SLOT:
            return None
        edge = self._cells[block * self.block_size + j]
        return None if edge == EMPTY_SLOT else edge

    def insert(self, v: int, gamma: int, edge: int) -> None:
        """
        Store edge under (v, gamma).

        Raises:
            DuplicateKeyError: If the key is already present
            DictionaryFullError: If M entries are already stored
        """
        k, j = divmod(self._index(v, gamma), self.block_size)
        block = self._top[k]
        if block == EMPTY_SLOT:
            if not self._free:
                raise DictionaryFullError(f"All {self.capacity} blocks in use")
            block = self._free.pop()
            self._top[k] = block
        cell = block * self.block_size + j
        if self._cells[cell] != EMPTY_SLOT:
            raise DuplicateKeyError(f"Key ({v}, {gamma}) already maps to edge {self._cells[cell]}")
        self._cells[cell] = edge
        self._counts[k] += 1
        self._size += 1

    def delete(self, v: int, gamma: int) -> None:
        """Remove (v, gamma); absent keys are ignored."""
        k, j = divmod(self._index(v, gamma), self.block_size)
        block = self._top[k]
        if block == EMPTY_SLOT:
            return
        cell = block * self.block_size + j
        if self._cells[cell] == EMPTY_SLOT:
            return
        self._cells[cell] = EMPTY_SLOT
        self._size -= 1
        self._counts[k] -= 1
        if self._counts[k] == 0:
            self._top[k] = EMPTY_SLOT
            self._free.append(block)

    def __len__(self) -> int:
        return self._size

    @property
    def blocks_free(self) -> int:
        return len(self._free)

    @property
    def blocks_in_use(self) -> int:
        return sum(1 for block in self._top if block != EMPTY_SLOT)

    def range_count(self, k: int) -> int:
        return self._counts[k]

    def range_block(self, k: int) -> Optional[int]:
        block = self._top[k]
        return None if block == EMPTY_SLOT else block


class DirectDictionary:
    """
    Plain-array (vertex, color) -> edge dictionary.

    Initialization writes U + 1 cells, which is affordable when
    m * sqrt(n) is at least n * d.
    """

    def __init__(self, n: int, stride: int, capacity: int):
        self.n = n
        self.stride = max(1, stride)
        self.universe = n * self.stride
        self.capacity = max(1, capacity)
        self._cells: List[int] = [EMPTY_SLOT] * (self.universe + 1)
        self._size = 0
        self.cells_written = self.universe + 1

    def _index(self, v: int, gamma: int) -> int:
        if not (0 <= v < self.n and 1 <= gamma <= self.stride):
            raise KeyRangeError(f"Key ({v}, {gamma}) outside n={self.n}, colors 1..{self.stride}")
        return v * self.stride + gamma

    def search(self, v: int, gamma: int) -> Optional[int]:
        edge = self._cells[self._index(v, gamma)]
        return None if edge == EMPTY_SLOT else edge

    def insert(self, v: int, gamma: int, edge: int) -> None:
        index = self._index(v, gamma)
        if self._cells[index] != EMPTY_SLOT:
            raise DuplicateKeyError(f"Key ({v}, {gamma}) already maps to edge {self._cells[index]}")
        if self._size >= self.capacity:
            raise DictionaryFullError(f"Capacity {self.capacity} reached")
        self._cells[index] = edge
        self._size += 1

    def delete(self, v: int, gamma: int) -> None:
        index = self._index(v, gamma)
        if self._cells[index] != EMPTY_SLOT:
            self._cells[index] = EMPTY_SLOT
            self._size -= 1

    def __len__(self) -> int:
        return self._size


def make_dictionary(n: int, stride: int, capacity: int, backend: str = BACKEND_TWO_LEVEL):
    """
    Build a dictionary for keys (v, gamma) with v < n and gamma <= stride.

    Args:
        n: Vertex count
        stride: Largest color stored
        capacity: Maximum number of live entries (2 * m_top)
        backend: 'two-level', 'direct' or 'auto' (direct when n * stride <= m * sqrt(n))

    Returns:
        PairDictionary or DirectDictionary
    """
    if backend == BACKEND_AUTO:
        m_top = capacity // 2
        backend = BACKEND_DIRECT if n * stride <= m_top * math.sqrt(n) else BACKEND_TWO_LEVEL
    if backend == BACKEND_DIRECT:
        return DirectDictionary(n, stride, capacity)
    if backend == BACKEND_TWO_LEVEL:
        return PairDictionary(n, stride, capacity)
    raise ValueError(f"Unknown dictionary backend {backend!r}")
