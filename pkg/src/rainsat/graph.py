"""Immutable simple-graph substrate with bitmask adjacency rows.

Adjacency rows are arbitrary-precision ints used as vertex bitmasks, so the
same representation covers both the small graphs the solvers see and the
128-vertex folded hypercubes the constructions produce.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with a stable, indexed edge list.

    Invariants: no loops, no duplicate pairs, every edge stored as (u, v)
    with u < v, edge indices dense 0..m-1, adjacency rows symmetric.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...] = field(repr=False)
    _index: dict[tuple[int, int], int] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> Iterator[int]:
        row = self.adj[v]
        while row:
            low = row & -row
            yield low.bit_length() - 1
            row ^= low

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge uv; raises KeyError if absent."""
        return self._index[(u, v) if u < v else (v, u)]

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.adj[u] >> v & 1
        ]

    def with_edge(self, u: int, v: int) -> "Graph":
        """New graph with edge uv appended (index m); uv must be a non-edge."""
        if u == v:
            raise ValueError(f"loop edge ({u},{v})")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) already present")
        return build_graph(self.n, self.edges + ((u, v),))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= self.adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def distance(self, u: int, v: int) -> int:
        """BFS distance; -1 if unreachable."""
        if u == v:
            return 0
        seen = 1 << u
        frontier = seen
        dist = 0
        while frontier:
            dist += 1
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= self.adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            if frontier >> v & 1:
                return dist
            seen |= frontier
        return -1

    def diameter(self) -> int:
        best = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                d = self.distance(u, v)
                if d < 0:
                    raise ValueError("diameter of a disconnected graph")
                best = max(best, d)
        return best


def build_graph(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from vertex pairs, deduplicating while keeping the
    first occurrence's position so edge indices are stable."""
    if n < 0:
        raise ValueError(f"vertex count {n} is negative")
    adj = [0] * n
    edges: list[tuple[int, int]] = []
    index: dict[tuple[int, int], int] = {}
    for u, v in pairs:
        if u == v:
            raise ValueError(f"loop edge ({u},{v})")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u > v:
            u, v = v, u
        if adj[u] >> v & 1:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        index[(u, v)] = len(edges)
        edges.append((u, v))
    return Graph(n=n, edges=tuple(edges), adj=tuple(adj), _index=index)


def empty_graph(n: int) -> Graph:
    return build_graph(n, ())


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return build_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def join_graphs(g: Graph, h: Graph) -> Graph:
    """Join of g and h: disjoint union plus every cross pair.

    h's vertices are shifted by g.n; resulting edge order is g's edges,
    h's edges, then cross pairs in (g-vertex, h-vertex) order.
    """
    off = g.n
    pairs = list(g.edges)
    pairs += [(u + off, v + off) for u, v in h.edges]
    pairs += [(u, v + off) for u in range(g.n) for v in range(h.n)]
    return build_graph(g.n + h.n, pairs)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    pairs = list(g.edges) + [(u + off, v + off) for u, v in h.edges]
    return build_graph(g.n + h.n, pairs)
