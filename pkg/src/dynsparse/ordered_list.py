"""Priority-ordered element list with rank access and predicate scans.

Elements carry distinct positive integer priorities; rank 1 holds the
largest priority. The representation is a pair of parallel sorted arrays
(internal choice; only the operation contract matters to callers):
next_with pays for the ranks it scans, mutations pay O(size) memmove,
which beats pointer structures at the list sizes this library produces.

Single writer; concurrent reads between mutations are safe.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from typing import Callable, Iterable, Iterator


class OrderedList:
    __slots__ = ("_negp", "_values")

    def __init__(self, pairs: Iterable[tuple[object, int]] = ()) -> None:
        """Build from (value, priority) pairs; priorities must be distinct."""
        items = sorted(((-p, v) for v, p in pairs))
        self._negp = [np for np, _ in items]
        self._values = [v for _, v in items]
        for a, b in zip(self._negp, self._negp[1:]):
            if a == b:
                raise ValueError(f"duplicate priority {-a}")

    def __len__(self) -> int:
        return len(self._negp)

    def _check_rank(self, k: int) -> None:
        if not 1 <= k <= len(self._negp):
            raise IndexError(f"rank {k} out of bounds [1,{len(self._negp)}]")

    def query(self, k: int):
        """Value of the element with k-th largest priority."""
        self._check_rank(k)
        return self._values[k - 1]

    def priority_at(self, k: int) -> int:
        self._check_rank(k)
        return -self._negp[k - 1]

    def update_value(self, k: int, value) -> None:
        self._check_rank(k)
        self._values[k - 1] = value

    def update_priority(self, k: int, p: int) -> None:
        """Re-key the rank-k element to priority p, preserving distinctness."""
        self._check_rank(k)
        if -p in self._negp and self._negp[k - 1] != -p:
            raise ValueError(f"priority {p} already in use")
        value = self._values.pop(k - 1)
        self._negp.pop(k - 1)
        idx = bisect_left(self._negp, -p)
        self._negp.insert(idx, -p)
        self._values.insert(idx, value)

    def find(self, p: int):
        """Return (value with priority p, count of elements with priority >= p)."""
        idx = bisect_left(self._negp, -p)
        if idx >= len(self._negp) or self._negp[idx] != -p:
            raise KeyError(f"no element with priority {p}")
        return self._values[idx], idx + 1

    def rank_of_priority(self, p: int) -> int:
        """Rank of the element with priority p (1-based)."""
        return self.find(p)[1]

    def next_with(self, k: int, f: Callable[[object], bool]) -> int:
        """Smallest rank q >= k whose value satisfies f, else size+1."""
        if k < 1:
            k = 1
        values = self._values
        for idx in range(k - 1, len(values)):
            if f(values[idx]):
                return idx + 1
        return len(values) + 1

    def insert(self, value, p: int) -> None:
        """Add a new element (not part of the minimal contract, used at build time)."""
        idx = bisect_left(self._negp, -p)
        if idx < len(self._negp) and self._negp[idx] == -p:
            raise ValueError(f"priority {p} already in use")
        self._negp.insert(idx, -p)
        self._values.insert(idx, value)

    def items(self) -> Iterator[tuple[object, int]]:
        """(value, priority) pairs in rank order (decreasing priority)."""
        for np, v in zip(self._negp, self._values):
            yield v, -np
