"""Decremental bounded-depth shortest-path tree over a directed graph.

Maintains, under batches of edge deletions, an exact distance array
Dist(v) = min(shortest-path distance from the source, L+1) together with a
parent pointer Scan(v) into a priority-ordered in-edge list In(v). The
pointer always designates the first element of In(v), in decreasing
priority order, whose tail sits at distance Dist(v) - 1; the pointed edges
form a tree spanning exactly the vertices within distance L.

Batch deletions proceed in phases i = 0..L. Phase i settles every vertex
whose final distance is i: vertices that lost their parent rescan their
in-list from the current pointer; on overflow the pointer resets to the
head, the vertex's distance is bumped to i+1, and the vertex plus its
current tree children are deferred to the next phase. Distances never
decrease. Within a phase, vertex order is immaterial (priorities are
distinct), which is the phase-barrier contract that makes the per-phase
work safely parallelizable; this implementation runs phases sequentially
and keeps the contract by iterating in sorted order.

Deleted edges are tombstoned (marked invalid) rather than removed, so
ranks in In(v) stay stable across deletions.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .ordered_list import OrderedList


def bounded_bfs(n: int, edges: Iterable[tuple[int, int]], source: int, depth: int) -> list[int]:
    """Distances from source capped at depth; unreachable/beyond get depth+1."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
    return _bfs_adj(n, adj, source, depth)


def _bfs_adj(n: int, adj: Sequence[Iterable[int]], source: int, depth: int) -> list[int]:
    dist = [depth + 1] * n
    dist[source] = 0
    frontier = deque([source])
    while frontier:
        u = frontier.popleft()
        du = dist[u]
        if du >= depth:
            continue
        for w in adj[u]:
            if dist[w] > du + 1:
                dist[w] = du + 1
                frontier.append(w)
    return dist


@dataclass
class ChangeReport:
    """What a deletion batch did: per-vertex distance and parent changes."""

    dist_changes: dict[int, tuple[int, int]] = field(default_factory=dict)
    parent_changes: dict[int, tuple[int | None, int | None]] = field(default_factory=dict)

    def is_empty(self) -> bool:
        return not self.dist_changes and not self.parent_changes


class EsTree:
    """Bounded-depth decremental shortest-path tree. Single writer."""

    def __init__(
        self,
        n: int,
        edges: Sequence[tuple[int, int]],
        source: int,
        depth: int,
        priorities: Sequence[int] | None = None,
    ) -> None:
        """Build the tree for a directed graph given as an edge list.

        priorities[i] keys edge i inside In(head); they must be distinct
        within each in-list. Defaults to the tail id, which is distinct
        because the graph is simple per direction.
        """
        if depth > n:
            raise ValueError("depth bound must be at most n")
        self.n = n
        self.source = source
        self.depth = depth
        m = len(edges)
        self.tail = [0] * m
        self.head = [0] * m
        self.valid = bytearray([1]) * m if m else bytearray()
        self.prio = list(priorities) if priorities is not None else [0] * m
        self.edge_id: dict[tuple[int, int], int] = {}
        self.out: list[list[int]] = [[] for _ in range(n)]
        in_pairs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(edges):
            if u == v:
                raise ValueError("self-loops not allowed")
            if (u, v) in self.edge_id:
                raise ValueError(f"duplicate directed edge ({u},{v})")
            self.edge_id[(u, v)] = eid
            self.tail[eid] = u
            self.head[eid] = v
            if priorities is None:
                self.prio[eid] = u + 1
            self.out[u].append(eid)
            in_pairs[v].append((eid, self.prio[eid]))
        self.inlist = [OrderedList(pairs) for pairs in in_pairs]
        self.initial_in_degree = [len(pairs) for pairs in in_pairs]

        self.dist = _bfs_adj(n, [[self.head[e] for e in outs] for outs in self.out], source, depth)
        self.scan_eid = [-1] * n
        self.scan_movement = [0] * n
        self.u_insertions = 0
        for v in range(n):
            if 1 <= self.dist[v] <= depth:
                q = self._next_parent(v, 1, self.dist[v] - 1)
                assert q <= len(self.inlist[v]), "vertex within depth must have a parent"
                self.scan_eid[v] = self.inlist[v].query(q)
                self.scan_movement[v] += q - 1

    # -- queries ---------------------------------------------------------

    def parent(self, v: int) -> int | None:
        eid = self.scan_eid[v]
        return self.tail[eid] if eid >= 0 else None

    def tree_edges(self) -> list[tuple[int, int]]:
        """Directed (parent, child) pairs of the current tree."""
        return [(self.tail[e], v) for v, e in enumerate(self.scan_eid) if e >= 0]

    def in_tree(self, v: int) -> bool:
        return self.dist[v] <= self.depth

    # -- internals -------------------------------------------------------

    def _next_parent(self, v: int, k: int, target: int) -> int:
        dist = self.dist
        tail = self.tail
        valid = self.valid
        return self.inlist[v].next_with(k, lambda e: valid[e] and dist[tail[e]] == target)

    def _rank_of(self, eid: int) -> int:
        return self.inlist[self.head[eid]].rank_of_priority(self.prio[eid])

    def _tree_children(self, v: int) -> list[int]:
        scan = self.scan_eid
        return [self.head[e] for e in self.out[v] if self.valid[e] and scan[self.head[e]] == e]

    # -- updates ---------------------------------------------------------

    def delete_batch(self, edges: Iterable[tuple[int, int]]) -> ChangeReport:
        """Delete a batch of directed edges; unknown edges are ignored.

        Restores all invariants and reports every distance change and
        every parent-pointer change.
        """
        eids = []
        for u, v in edges:
            eid = self.edge_id.pop((u, v), None)
            if eid is not None and self.valid[eid]:
                eids.append(eid)

        report = ChangeReport()
        old_parent: dict[int, int | None] = {}
        parent_lost = []
        for eid in eids:
            self.valid[eid] = 0
            v = self.head[eid]
            if self.scan_eid[v] == eid:
                parent_lost.append(v)
        cursor: dict[int, int] = {}
        pending: dict[int, set[int]] = defaultdict(set)

        # Re-point every vertex whose tree edge was deleted to the next
        # in-list element at the same level; defer the rest to their phase.
        for v in sorted(parent_lost):
            old_parent[v] = self.tail[self.scan_eid[v]]
            d = self.dist[v]
            k = self._rank_of(self.scan_eid[v])
            q = self._next_parent(v, k, d - 1)
            self.scan_movement[v] += q - k
            if q <= len(self.inlist[v]):
                self.scan_eid[v] = self.inlist[v].query(q)
                cursor[v] = q
            else:
                self.scan_eid[v] = -1
                cursor[v] = 1
                pending[d].add(v)

        touched: set[int] = set(parent_lost)
        u_set: set[int] = set()
        for i in range(self.depth + 1):
            u_new: set[int] = set()
            for v in sorted(u_set):
                k = cursor[v]
                q = self._next_parent(v, k, i - 1)
                self.scan_movement[v] += q - k
                if q <= len(self.inlist[v]):
                    self.scan_eid[v] = self.inlist[v].query(q)
                    cursor[v] = q
                else:
                    cursor[v] = 1
                    if self.scan_eid[v] >= 0:
                        old_parent.setdefault(v, self.tail[self.scan_eid[v]])
                        self.scan_eid[v] = -1
                    for c in self._tree_children(v):
                        old_parent.setdefault(c, self.tail[self.scan_eid[c]])
                        cursor.setdefault(c, self._rank_of(self.scan_eid[c]))
                        u_new.add(c)
                        touched.add(c)
                    u_new.add(v)
            u_new |= pending.pop(i, set())
            if not u_new and not pending:
                break
            self.u_insertions += len(u_new)
            for v in u_new:
                touched.add(v)
                if self.dist[v] != i + 1:
                    base = report.dist_changes.get(v)
                    old_d = base[0] if base else self.dist[v]
                    report.dist_changes[v] = (old_d, i + 1)
                    self.dist[v] = i + 1
            u_set = u_new

        for v in touched:
            was = old_parent.get(v)
            now = self.parent(v)
            if was != now:
                report.parent_changes[v] = (was, now)
        report.dist_changes = {
            v: (a, b) for v, (a, b) in report.dist_changes.items() if a != b
        }
        return report

    # -- hooks for layered structures -------------------------------------

    def update_edge_priority(self, eid: int, new_prio: int) -> None:
        """Re-key one in-list element. The scan pointer survives by identity."""
        if self.prio[eid] == new_prio:
            return
        lst = self.inlist[self.head[eid]]
        lst.update_priority(lst.rank_of_priority(self.prio[eid]), new_prio)
        self.prio[eid] = new_prio

    def rescan_from_head(self, v: int) -> bool:
        """Re-derive Scan(v) from rank 1; returns True if the parent changed.

        Used after priority churn reorders In(v); distances are unchanged.
        """
        if not 1 <= self.dist[v] <= self.depth:
            return False
        q = self._next_parent(v, 1, self.dist[v] - 1)
        assert q <= len(self.inlist[v]), "in-tree vertex lost all parents"
        new_eid = self.inlist[v].query(q)
        if new_eid == self.scan_eid[v]:
            return False
        self.scan_eid[v] = new_eid
        return True

    # -- verification ------------------------------------------------------

    def current_edges(self) -> list[tuple[int, int]]:
        return [(self.tail[e], self.head[e]) for e in range(len(self.tail)) if self.valid[e]]

    def recompute_distances(self) -> list[int]:
        """Independent from-scratch distance computation on the residual graph."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for e in range(len(self.tail)):
            if self.valid[e]:
                adj[self.tail[e]].append(self.head[e])
        return _bfs_adj(self.n, adj, self.source, self.depth)

    def verify_distances(self) -> None:
        fresh = self.recompute_distances()
        assert fresh == self.dist, "distance array deviates from fresh recomputation"

    def verify_scan_pointers(self) -> None:
        """Scan(v) must select the max-priority valid tail at Dist(v)-1."""
        for v in range(self.n):
            if 1 <= self.dist[v] <= self.depth:
                best = None
                for e, _p in self.inlist[v].items():
                    if self.valid[e] and self.dist[self.tail[e]] == self.dist[v] - 1:
                        best = e
                        break
                assert best is not None and self.scan_eid[v] == best, (
                    f"scan pointer of {v} is not the first valid parent"
                )
            else:
                assert self.scan_eid[v] == -1
