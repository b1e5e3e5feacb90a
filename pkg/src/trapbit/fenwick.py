"""Binary indexed trees (Fenwick trees) over positions 1..N.

Two flavours are provided: :class:`SumFenwick` keeps cumulative sums and
supports a targeted reset, :class:`MaxFenwick` keeps prefix maxima under
monotone point raises.  The element type is whatever the caller adds in;
Python ints give exact big-number counts for free.

Neither class is synchronized.  A single instance must be mutated by one
thread at a time.
"""

from __future__ import annotations

from typing import Any, Iterable


def lowbit(i: int) -> int:
    """Largest power of two dividing ``i`` (``i & -i``)."""
    return i & -i


def update_path(index: int, size: int) -> list[int]:
    """Tree nodes touched by a point update at ``index``."""
    path = []
    while index <= size:
        path.append(index)
        index += index & -index
    return path


def query_path(index: int) -> list[int]:
    """Tree nodes read by a prefix query at ``index`` (lowest bits stripped)."""
    path = []
    while index > 0:
        path.append(index)
        index -= index & -index
    return path


class SumFenwick:
    """Cumulative sums over A(1..size) with O(log N) update and query.

    ``tree[i]`` holds A(i - lowbit(i) + 1) + ... + A(i).  Slot 0 is unused.
    ``visits`` counts tree nodes touched by all operations so far.
    """

    def __init__(self, size: int, zero: Any = 0):
        if size < 1:
            raise ValueError(f"size must be positive, got {size}")
        self.size = size
        self.zero = zero
        self.tree = [zero] * (size + 1)
        self.visits = 0

    def _check(self, index: int, lo: int) -> None:
        if not lo <= index <= self.size:
            raise IndexError(f"index {index} outside {lo}..{self.size}")

    def update(self, index: int, delta: Any) -> None:
        """Add ``delta`` to A(index)."""
        self._check(index, 1)
        tree, size = self.tree, self.size
        steps = 0
        while index <= size:
            tree[index] += delta
            index += index & -index
            steps += 1
        self.visits += steps

    def prefix_sum(self, index: int) -> Any:
        """A(1) + ... + A(index); index 0 gives the additive identity."""
        self._check(index, 0)
        tree = self.tree
        total = self.zero
        steps = 0
        while index > 0:
            total += tree[index]
            index -= index & -index
            steps += 1
        self.visits += steps
        return total

    def total(self) -> Any:
        return self.prefix_sum(self.size)

    def reset(self, touched: Iterable[tuple[int, Any]]) -> None:
        """Undo exactly the listed ``(index, delta)`` updates.

        The list must describe every update since the structure was last
        clean.  Cost is O(len(touched) * log N) rather than O(N).
        """
        for index, delta in touched:
            self.update(index, -delta)

    def values(self) -> list[Any]:
        """Logical array A(1..size), recovered from prefix differences."""
        out, prev = [], self.zero
        for i in range(1, self.size + 1):
            cur = self.prefix_sum(i)
            out.append(cur - prev)
            prev = cur
        return out

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"SumFenwick(size={self.size})"


class MaxFenwick:
    """Prefix maxima over A(1..size) under monotone point raises.

    Untouched positions hold ``sentinel``, which is also the answer for an
    empty prefix.  There is no reset: only the sum variant is reused across
    passes, and a max tree cannot be rolled back by inverse updates anyway.
    Elements need only be mutually comparable (tuples work).
    """

    def __init__(self, size: int, sentinel: Any = -1):
        if size < 1:
            raise ValueError(f"size must be positive, got {size}")
        self.size = size
        self.sentinel = sentinel
        self.tree = [sentinel] * (size + 1)
        self.visits = 0

    def _check(self, index: int, lo: int) -> None:
        if not lo <= index <= self.size:
            raise IndexError(f"index {index} outside {lo}..{self.size}")

    def raise_to(self, index: int, value: Any) -> None:
        """Set A(index) to max(A(index), value)."""
        self._check(index, 1)
        tree, size = self.tree, self.size
        steps = 0
        while index <= size:
            if tree[index] < value:
                tree[index] = value
            index += index & -index
            steps += 1
        self.visits += steps

    def prefix_max(self, index: int) -> Any:
        """max(A(1..index)); the sentinel when the prefix is empty or untouched."""
        self._check(index, 0)
        tree = self.tree
        best = self.sentinel
        steps = 0
        while index > 0:
            if tree[index] > best:
                best = tree[index]
            index -= index & -index
            steps += 1
        self.visits += steps
        return best

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"MaxFenwick(size={self.size}, sentinel={self.sentinel!r})"
