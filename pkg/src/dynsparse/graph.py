"""Undirected simple graph over dense integer vertex ids, plus the batch
and delta-edge currency shared by every maintained structure.

Vertices are the integers 0..n-1 with n fixed for the lifetime of a Graph.
Edges are canonical pairs (u, v) with u < v. Updates arrive as batches of
disjoint insert/delete sets; every maintained structure emits its output
churn as a DeltaEdges pair.

Concurrency contract: single writer per Graph instance; read-only queries
may run concurrently between batches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


Edge = tuple[int, int]


def canonicalize(u: int, v: int) -> Edge:
    """Return the canonical (min, max) form of an undirected edge.

    Raises ValueError on self-loops; the library works on simple graphs.
    """
    if u == v:
        raise ValueError(f"self-loop ({u},{v}) is not a valid edge")
    return (u, v) if u < v else (v, u)


@dataclass
class UpdateBatch:
    """One batch of edge updates: inserts and deletes, disjoint sets."""

    inserts: set[Edge] = field(default_factory=set)
    deletes: set[Edge] = field(default_factory=set)

    def __post_init__(self) -> None:
        overlap = self.inserts & self.deletes
        if overlap:
            raise ValueError(f"edges both inserted and deleted in one batch: {sorted(overlap)}")

    def is_empty(self) -> bool:
        return not self.inserts and not self.deletes


@dataclass
class DeltaEdges:
    """Output churn of a maintained structure for one batch.

    Items are canonical edges, or (edge, weight) pairs for weighted
    outputs; the container does not care. After cancel() the two sides
    are disjoint.
    """

    inserted: set = field(default_factory=set)
    deleted: set = field(default_factory=set)

    def cancel(self) -> "DeltaEdges":
        """Drop items present on both sides (matched insert/delete pairs)."""
        both = self.inserted & self.deleted
        if both:
            self.inserted -= both
            self.deleted -= both
        return self

    def merge(self, other: "DeltaEdges") -> "DeltaEdges":
        self.inserted |= other.inserted
        self.deleted |= other.deleted
        return self

    def is_empty(self) -> bool:
        return not self.inserted and not self.deleted

    def size(self) -> int:
        return len(self.inserted) + len(self.deleted)


def cancel(delta: DeltaEdges) -> DeltaEdges:
    """Functional alias for DeltaEdges.cancel on a copy."""
    return DeltaEdges(set(delta.inserted), set(delta.deleted)).cancel()


class Graph:
    """Hashed-adjacency undirected simple graph with a fixed vertex count."""

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.edges: set[Edge] = set()
        self.adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            self.add_edge(u, v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex id {v} out of range [0,{self.n})")

    def has_edge(self, u: int, v: int) -> bool:
        return canonicalize(u, v) in self.edges

    def add_edge(self, u: int, v: int) -> bool:
        """Insert an edge; returns False if already present."""
        e = canonicalize(u, v)
        self._check_vertex(e[0])
        self._check_vertex(e[1])
        if e in self.edges:
            return False
        self.edges.add(e)
        self.adj[e[0]].add(e[1])
        self.adj[e[1]].add(e[0])
        return True

    def remove_edge(self, u: int, v: int) -> bool:
        """Delete an edge; returns False if absent."""
        e = canonicalize(u, v)
        self._check_vertex(e[0])
        self._check_vertex(e[1])
        if e not in self.edges:
            return False
        self.edges.remove(e)
        self.adj[e[0]].discard(e[1])
        self.adj[e[1]].discard(e[0])
        return True

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> set[int]:
        return self.adj[v]

    def num_edges(self) -> int:
        return len(self.edges)

    def copy(self) -> "Graph":
        return Graph(self.n, self.edges)

    def check_consistency(self) -> None:
        """Assert the edges/adj views agree; used by tests."""
        assert sum(len(a) for a in self.adj) == 2 * len(self.edges)
        for u, v in self.edges:
            assert u < v and v in self.adj[u] and u in self.adj[v]


def apply_batch(g: Graph, batch: UpdateBatch) -> UpdateBatch:
    """Apply a raw batch to g and return the filtered batch actually applied.

    Duplicate inserts and absent deletes are silently dropped; an edge
    appearing on both sides of the raw batch is rejected as malformed
    (UpdateBatch refuses to construct it).
    """
    applied_ins = set()
    applied_del = set()
    for u, v in sorted(batch.inserts):
        if g.add_edge(u, v):
            applied_ins.add(canonicalize(u, v))
    for u, v in sorted(batch.deletes):
        if g.remove_edge(u, v):
            applied_del.add(canonicalize(u, v))
    return UpdateBatch(applied_ins, applied_del)
