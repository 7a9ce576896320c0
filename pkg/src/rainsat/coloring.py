"""Proper edge-colorings and rainbow-copy detection.

An edge-coloring is a tuple of nonnegative ints, one per edge index of the
host graph. The canonical form relabels colors into first-use order along
the edge index sequence (a restricted-growth string), which picks exactly
one representative from each relabeling class.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph
from .patterns import Copy, Pattern

EdgeColoring = tuple[int, ...]


def is_proper(g: Graph, colors: Sequence[int]) -> bool:
    """True iff no two incident edges share a color."""
    if len(colors) != g.m:
        raise ValueError(f"coloring has {len(colors)} entries for {g.m} edges")
    seen: list[set[int]] = [set() for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        c = colors[i]
        if c in seen[u] or c in seen[v]:
            return False
        seen[u].add(c)
        seen[v].add(c)
    return True


def canonicalize_colors(colors: Sequence[int]) -> EdgeColoring:
    """Relabel colors into first-use order along the edge index sequence."""
    relabel: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return tuple(out)


def is_restricted_growth(colors: Sequence[int]) -> bool:
    nxt = 0
    for c in colors:
        if c > nxt:
            return False
        if c == nxt:
            nxt += 1
    return True


def color_classes(g: Graph, colors: Sequence[int]) -> dict[int, list[int]]:
    classes: dict[int, list[int]] = {}
    for i in range(g.m):
        classes.setdefault(colors[i], []).append(i)
    return classes


def _dense_colors(colors: Sequence[int]) -> list[int]:
    # Remap to dense ids so colors can be used as bit positions.
    ids: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in ids:
            ids[c] = len(ids)
        out.append(ids[c])
    return out


def find_rainbow_copy(g: Graph, colors: Sequence[int], pat: Pattern) -> Copy | None:
    """First copy of pat whose edges carry pairwise distinct colors, or None.

    Path and cycle patterns use a color-set-pruned DFS; cliques extend by
    vertex with a running color mask; general patterns run a backtracking
    embedding with the same pruning.
    """
    if not is_proper(g, colors):
        raise ValueError("find_rainbow_copy requires a proper coloring")
    if pat.vertex_count > g.n:
        return None
    dense = _dense_colors(colors)
    if pat.kind == "clique":
        verts = _rainbow_clique(g, dense, pat.size)
    elif pat.kind == "path":
        verts = _rainbow_path(g, dense, pat.size)
    elif pat.kind == "cycle":
        verts = _rainbow_cycle(g, dense, pat.size)
    else:
        verts = _rainbow_general(g, dense, pat.graph)
    if verts is None:
        return None
    from .patterns import _edges_of_vertex_seq

    return Copy(vertices=verts, edge_indexes=_edges_of_vertex_seq(g, verts, pat))


def _rainbow_clique(g: Graph, dense: list[int], r: int) -> tuple[int, ...] | None:
    adj = g.adj
    eidx = g.edge_index

    def extend(chosen: list[int], cand: int, cmask: int) -> tuple[int, ...] | None:
        if len(chosen) == r:
            return tuple(chosen)
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            mask = cmask
            ok = True
            for u in chosen:
                bit = 1 << dense[eidx(u, v)]
                if mask & bit:
                    ok = False
                    break
                mask |= bit
            if ok:
                chosen.append(v)
                got = extend(chosen, cand & adj[v] & ~((1 << (v + 1)) - 1), mask)
                if got is not None:
                    return got
                chosen.pop()
        return None

    for v in range(g.n):
        got = extend([v], adj[v] & ~((1 << (v + 1)) - 1), 0)
        if got is not None:
            return got
    return None


def _rainbow_path(g: Graph, dense: list[int], k: int) -> tuple[int, ...] | None:
    adj = g.adj
    eidx = g.edge_index

    def extend(path: list[int], used: int, cmask: int) -> tuple[int, ...] | None:
        if len(path) == k:
            return tuple(path)
        nbrs = adj[path[-1]] & ~used
        while nbrs:
            low = nbrs & -nbrs
            v = low.bit_length() - 1
            nbrs ^= low
            bit = 1 << dense[eidx(path[-1], v)]
            if cmask & bit:
                continue
            path.append(v)
            got = extend(path, used | low, cmask | bit)
            if got is not None:
                return got
            path.pop()
        return None

    for v in range(g.n):
        got = extend([v], 1 << v, 0)
        if got is not None:
            return got
    return None


def _rainbow_cycle(g: Graph, dense: list[int], k: int) -> tuple[int, ...] | None:
    adj = g.adj
    eidx = g.edge_index

    def extend(path: list[int], used: int, cmask: int) -> tuple[int, ...] | None:
        if len(path) == k:
            if adj[path[-1]] >> path[0] & 1:
                bit = 1 << dense[eidx(path[-1], path[0])]
                if not cmask & bit:
                    return tuple(path)
            return None
        lo_mask = ~((1 << (path[0] + 1)) - 1)
        nbrs = adj[path[-1]] & ~used & lo_mask
        while nbrs:
            low = nbrs & -nbrs
            v = low.bit_length() - 1
            nbrs ^= low
            bit = 1 << dense[eidx(path[-1], v)]
            if cmask & bit:
                continue
            path.append(v)
            got = extend(path, used | low, cmask | bit)
            if got is not None:
                return got
            path.pop()
        return None

    for v in range(g.n):
        got = extend([v], 1 << v, 0)
        if got is not None:
            return got
    return None


def _rainbow_general(g: Graph, dense: list[int], pat: Graph) -> tuple[int, ...] | None:
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
    back = []
    for i, pv in enumerate(order):
        back.append([j for j in range(i) if pat.adj[pv] >> order[j] & 1])
    image = [0] * pat.n
    eidx = g.edge_index

    def extend(i: int, used: int, cmask: int) -> tuple[int, ...] | None:
        if i == pat.n:
            mapped = [0] * pat.n
            for j, pv in enumerate(order):
                mapped[pv] = image[j]
            return tuple(mapped)
        cand = ~used & ((1 << g.n) - 1)
        for j in back[i]:
            cand &= g.adj[image[j]]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            mask = cmask
            ok = True
            for j in back[i]:
                bit = 1 << dense[eidx(image[j], v)]
                if mask & bit:
                    ok = False
                    break
                mask |= bit
            if ok:
                image[i] = v
                got = extend(i + 1, used | low, mask)
                if got is not None:
                    return got
        return None

    return extend(0, 0, 0)
