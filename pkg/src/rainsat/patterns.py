"""Forbidden patterns and copy enumeration.

A copy is identified by its edge-index set, so relabelings of the pattern
under its own automorphisms never produce duplicates: rainbowness is a
property of the edge set, not of a particular vertex map.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import Graph, complete_graph, cycle_graph, path_graph

_GENERAL_MAX_VERTICES = 10


@dataclass(frozen=True)
class Pattern:
    """Forbidden graph H: a clique K_r, path P_k, cycle C_k, or a small
    arbitrary graph."""

    kind: str  # "clique" | "path" | "cycle" | "general"
    size: int  # r for cliques, vertex count k for paths/cycles/general
    graph: Graph | None = None  # only for kind == "general"
    connected: bool = True

    @staticmethod
    def clique(r: int) -> "Pattern":
        if r < 3:
            raise ValueError(f"clique pattern needs r >= 3, got {r}")
        return Pattern("clique", r)

    @staticmethod
    def path(k: int) -> "Pattern":
        """Path on k vertices (k-1 edges)."""
        if k < 3:
            raise ValueError(f"path pattern needs k >= 3 vertices, got {k}")
        return Pattern("path", k)

    @staticmethod
    def cycle(k: int) -> "Pattern":
        if k < 3:
            raise ValueError(f"cycle pattern needs k >= 3, got {k}")
        return Pattern("cycle", k)

    @staticmethod
    def general(g: Graph) -> "Pattern":
        if g.n > _GENERAL_MAX_VERTICES:
            raise ValueError(f"general pattern limited to {_GENERAL_MAX_VERTICES} vertices, got {g.n}")
        if g.m == 0:
            raise ValueError("general pattern needs at least one edge")
        return Pattern("general", g.n, graph=g, connected=g.is_connected())

    @staticmethod
    def parse(text: str) -> "Pattern":
        """Parse "K4", "P5", "C7" shorthand."""
        t = text.strip()
        if len(t) >= 2 and t[0] in "KPCkpc" and t[1:].isdigit():
            k = int(t[1:])
            return {"k": Pattern.clique, "p": Pattern.path, "c": Pattern.cycle}[t[0].lower()](k)
        raise ValueError(f"cannot parse pattern {text!r} (expected K<r>, P<k>, or C<k>)")

    @property
    def vertex_count(self) -> int:
        return self.size

    @property
    def edge_count(self) -> int:
        if self.kind == "clique":
            return self.size * (self.size - 1) // 2
        if self.kind == "path":
            return self.size - 1
        if self.kind == "cycle":
            return self.size
        return self.graph.m

    def to_graph(self) -> Graph:
        if self.kind == "clique":
            return complete_graph(self.size)
        if self.kind == "path":
            return path_graph(self.size)
        if self.kind == "cycle":
            return cycle_graph(self.size)
        return self.graph

    def __str__(self) -> str:
        return {"clique": "K", "path": "P", "cycle": "C"}.get(self.kind, "H")[0] + str(self.size)


@dataclass(frozen=True, eq=False)
class Copy:
    """One copy of a pattern in a host graph.

    vertices: image of the pattern's vertices (path/cycle order for those
    kinds); edge_indexes: indices of the image's edges in the host.
    Copies compare equal iff their edge-index sets are equal.
    """

    vertices: tuple[int, ...]
    edge_indexes: frozenset[int]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Copy) and self.edge_indexes == other.edge_indexes

    def __hash__(self) -> int:
        return hash(self.edge_indexes)


def _clique_copies(g: Graph, r: int) -> Iterator[tuple[int, ...]]:
    # Extend by increasing vertex index; cand keeps common neighbors above v.
    n = g.n
    adj = g.adj

    def extend(chosen: list[int], cand: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == r:
            yield tuple(chosen)
            return
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            chosen.append(v)
            yield from extend(chosen, cand & adj[v] & ~((1 << (v + 1)) - 1))
            chosen.pop()

    for v in range(n):
        yield from extend([v], adj[v] & ~((1 << (v + 1)) - 1))


def _path_copies(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    # Simple paths on k vertices; emit each once by requiring start < end.
    adj = g.adj

    def extend(path: list[int], used: int) -> Iterator[tuple[int, ...]]:
        if len(path) == k:
            if path[0] < path[-1]:
                yield tuple(path)
            return
        nbrs = adj[path[-1]] & ~used
        while nbrs:
            low = nbrs & -nbrs
            v = low.bit_length() - 1
            nbrs ^= low
            path.append(v)
            yield from extend(path, used | low)
            path.pop()

    for v in range(g.n):
        yield from extend([v], 1 << v)


def _cycle_copies(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    # Cycles on k vertices rooted at their minimum vertex; the reflection
    # duplicate is killed by requiring second vertex < last vertex.
    adj = g.adj

    def extend(path: list[int], used: int) -> Iterator[tuple[int, ...]]:
        if len(path) == k:
            if adj[path[-1]] >> path[0] & 1 and path[1] < path[-1]:
                yield tuple(path)
            return
        lo_mask = ~((1 << (path[0] + 1)) - 1)  # only vertices above the root
        nbrs = adj[path[-1]] & ~used & lo_mask
        while nbrs:
            low = nbrs & -nbrs
            v = low.bit_length() - 1
            nbrs ^= low
            path.append(v)
            yield from extend(path, used | low)
            path.pop()

    for v in range(g.n):
        yield from extend([v], 1 << v)


def _general_copies(g: Graph, pat: Graph) -> Iterator[tuple[int, ...]]:
    # Backtracking isomorphism of pat into g. Pattern vertices are matched
    # in a connectivity-friendly static order; caller dedups by edge set.
    order: list[int] = []
    placed = 0
    for _ in range(pat.n):
        best, best_key = -1, (-1, -1)
        for v in range(pat.n):
            if placed >> v & 1:
                continue
            key = ((pat.adj[v] & placed).bit_count(), pat.degree(v))
            if key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    # Pattern neighbors among earlier-placed vertices, per order position.
    back = []
    for i, pv in enumerate(order):
        back.append([j for j in range(i) if pat.adj[pv] >> order[j] & 1])

    pos_deg = [pat.degree(pv) for pv in order]
    image = [0] * pat.n  # image[i] = host vertex for order[i]

    def extend(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == pat.n:
            mapped = [0] * pat.n
            for j, pv in enumerate(order):
                mapped[pv] = image[j]
            yield tuple(mapped)
            return
        cand = ~used & ((1 << g.n) - 1)
        for j in back[i]:
            cand &= g.adj[image[j]]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if g.degree(v) >= pos_deg[i]:
                image[i] = v
                yield from extend(i + 1, used | low)

    yield from extend(0, 0)


def _edges_of_vertex_seq(g: Graph, verts: tuple[int, ...], pat: Pattern) -> frozenset[int]:
    if pat.kind == "clique":
        return frozenset(g.edge_index(u, v) for u, v in combinations(verts, 2))
    if pat.kind == "path":
        return frozenset(g.edge_index(verts[i], verts[i + 1]) for i in range(len(verts) - 1))
    if pat.kind == "cycle":
        k = len(verts)
        return frozenset(g.edge_index(verts[i], verts[(i + 1) % k]) for i in range(k))
    return frozenset(g.edge_index(verts[u], verts[v]) for u, v in pat.graph.edges)


def enumerate_copies(g: Graph, pat: Pattern) -> list[Copy]:
    """Every copy of pat in g, exactly once, in deterministic order."""
    if pat.vertex_count > g.n:
        return []
    if pat.kind == "clique":
        seqs = _clique_copies(g, pat.size)
    elif pat.kind == "path":
        seqs = _path_copies(g, pat.size)
    elif pat.kind == "cycle":
        seqs = _cycle_copies(g, pat.size)
    else:
        seqs = _general_copies(g, pat.graph)
    out: list[Copy] = []
    seen: set[frozenset[int]] = set()
    for verts in seqs:
        es = _edges_of_vertex_seq(g, verts, pat)
        if es in seen:
            continue
        seen.add(es)
        out.append(Copy(vertices=verts, edge_indexes=es))
    return out


def count_copies(g: Graph, pat: Pattern) -> int:
    return len(enumerate_copies(g, pat))
