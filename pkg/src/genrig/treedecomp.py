"""Partition a multigraph's edges into k edge-disjoint spanning trees.

Uses matroid partitioning over k copies of the graphic matroid: edges are
inserted one at a time in ascending id, each insertion searching
breadth-first for a shortest chain of exchanges between forests. When an
edge cannot be inserted, the set of edges reached by the search spans
itself in every forest, which yields a vertex partition violating the
Tutte--Nash-Williams count.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Multigraph


@dataclass(frozen=True)
class TreeDecomposition:
    graph: Multigraph
    k: int
    trees: tuple[tuple[int, ...], ...]

    feasible = True

    def to_dict(self) -> dict:
        return {"k": self.k, "trees": [list(t) for t in self.trees]}


@dataclass(frozen=True)
class DecompositionRefusal:
    """Why no decomposition exists.

    ``reason`` is ``"edge-count"``, ``"disconnected"`` or ``"infeasible"``.
    For the last two, ``witness`` is a vertex partition with fewer than
    ``k * (len(witness) - 1)`` crossing edges.
    """

    graph: Multigraph
    k: int
    reason: str
    witness: tuple[tuple[int, ...], ...] | None = None
    cross_edges: int | None = None

    feasible = False

    def to_dict(self) -> dict:
        out = {"k": self.k, "reason": self.reason}
        if self.witness is not None:
            out["witness"] = [list(part) for part in self.witness]
            out["cross_edges"] = self.cross_edges
        return out


def cross_edge_count(g: Multigraph, partition) -> int:
    part_of = {}
    for i, part in enumerate(partition):
        for v in part:
            part_of[v] = i
    return sum(1 for u, v in g.edges if part_of[u] != part_of[v])


class _Forests:
    def __init__(self, g: Multigraph, k: int):
        self.g = g
        self.k = k
        self.owner: dict[int, int] = {}
        self.adj = [[[] for _ in range(g.n)] for _ in range(k)]

    def add(self, e: int, i: int) -> None:
        u, v = self.g.edges[e]
        self.owner[e] = i
        self.adj[i][u].append((v, e))
        self.adj[i][v].append((u, e))

    def remove(self, e: int) -> None:
        i = self.owner.pop(e)
        u, v = self.g.edges[e]
        self.adj[i][u].remove((v, e))
        self.adj[i][v].remove((u, e))

    def tree_path(self, i: int, s: int, t: int) -> list[int] | None:
        """Edge ids on the forest-``i`` path from ``s`` to ``t``; None if disconnected."""
        adj = self.adj[i]
        back = {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if x == t:
                break
            for y, e in adj[x]:
                if y not in back:
                    back[y] = (x, e)
                    queue.append(y)
        if t not in back:
            return None
        path = []
        while back[t] is not None:
            t, e = back[t]
            path.append(e)
        return path[::-1]

    def insert(self, e: int) -> set[int] | None:
        """Insert ``e`` via a shortest exchange chain; return the reached set on failure."""
        parent: dict[int, int | None] = {e: None}
        queue = deque([e])
        while queue:
            x = queue.popleft()
            u, v = self.g.edges[x]
            for i in range(self.k):
                if self.owner.get(x) == i:
                    continue
                cycle = self.tree_path(i, u, v)
                if cycle is None:
                    cur, target = x, i
                    while cur is not None:
                        prev = self.owner.get(cur)
                        if prev is not None:
                            self.remove(cur)
                        self.add(cur, target)
                        cur, target = parent[cur], prev
                    return None
                for y in cycle:
                    if y not in parent:
                        parent[y] = x
                        queue.append(y)
        return set(parent)

    def trees(self) -> tuple[tuple[int, ...], ...]:
        buckets = [[] for _ in range(self.k)]
        for e, i in self.owner.items():
            buckets[i].append(e)
        return tuple(tuple(sorted(b)) for b in buckets)


def decompose_into_spanning_trees(g: Multigraph, k: int) -> TreeDecomposition | DecompositionRefusal:
    if k < 1:
        raise ValueError("k must be >= 1")
    if not g.is_connected():
        parts = tuple(tuple(c) for c in g.components())
        return DecompositionRefusal(g, k, "disconnected", parts, cross_edge_count(g, parts))
    if g.m != k * (g.n - 1):
        return DecompositionRefusal(g, k, "edge-count")
    forests = _Forests(g, k)
    for e in g.edge_ids():
        reached = forests.insert(e)
        if reached is not None:
            parts = tuple(tuple(c) for c in g.components(sorted(reached)))
            return DecompositionRefusal(g, k, "infeasible", parts, cross_edge_count(g, parts))
    return TreeDecomposition(g, k, forests.trees())


def verify_decomposition(dec: TreeDecomposition) -> bool:
    """Check from scratch that ``dec.trees`` partition the edges into spanning trees."""
    g = dec.graph
    if len(dec.trees) != dec.k:
        return False
    seen: set[int] = set()
    for tree in dec.trees:
        if len(tree) != g.n - 1 if g.n else len(tree) != 0:
            return False
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in tree:
            if not 0 <= e < g.m or e in seen:
                return False
            seen.add(e)
            ru, rv = find(g.edges[e][0]), find(g.edges[e][1])
            if ru == rv:
                return False
            parent[ru] = rv
    return seen == set(g.edge_ids())
