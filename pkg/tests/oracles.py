"""Independent reference implementations used as test oracles.

Everything here deliberately avoids the library's optimized code paths:
copies come from raw permutations, coloring existence from plain DFS over
palette {1..m} with no rainbow pruning and no restricted-growth collapsing,
and isomorphism from networkx. Oracles stay independent of the code they
check.
"""

from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx
import numpy as np
from numba import njit

from rainsat import Graph, Pattern, build_graph
from rainsat.canonical import isomorphism_hash


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def brute_copies(g: Graph, pat: Pattern) -> set[frozenset[int]]:
    """All copies of pat in g as edge-index sets, by raw enumeration."""
    out: set[frozenset[int]] = set()
    k = pat.vertex_count
    if k > g.n:
        return out
    if pat.kind == "clique":
        for verts in combinations(range(g.n), k):
            if all(g.has_edge(u, v) for u, v in combinations(verts, 2)):
                out.add(frozenset(g.edge_index(u, v) for u, v in combinations(verts, 2)))
        return out
    if pat.kind == "path":
        for verts in permutations(range(g.n), k):
            if all(g.has_edge(verts[i], verts[i + 1]) for i in range(k - 1)):
                out.add(frozenset(g.edge_index(verts[i], verts[i + 1]) for i in range(k - 1)))
        return out
    if pat.kind == "cycle":
        for verts in permutations(range(g.n), k):
            if all(g.has_edge(verts[i], verts[(i + 1) % k]) for i in range(k)):
                out.add(frozenset(g.edge_index(verts[i], verts[(i + 1) % k]) for i in range(k)))
        return out
    pg = pat.graph
    for verts in permutations(range(g.n), k):
        if all(g.has_edge(verts[u], verts[v]) for u, v in pg.edges):
            out.add(frozenset(g.edge_index(verts[u], verts[v]) for u, v in pg.edges))
    return out


def naive_rainbow_free_exists(g: Graph, pat: Pattern, decompose: bool = True) -> bool:
    """Naive existence oracle: enumerate proper color assignments with no
    rainbow pruning and no restricted-growth collapsing; succeed at the
    first complete assignment leaving every copy non-rainbow.

    Two mathematically trivial reductions keep exhaustion affordable when
    decompose is set: edges outside every copy are skipped (they cannot
    affect any copy's rainbowness, and a proper partial coloring always
    extends greedily within palette {1..m}), and the remaining edges split
    into connected components that are enumerated independently (the
    patterns in use are connected, so no copy spans components). With
    decompose=False the enumeration runs over all edges of g at once from
    palette {1..m}, the purest form, affordable only for tiny m.
    """
    copies = brute_copies(g, pat)
    if not copies:
        return True
    if not decompose:
        return _naive_component_search_py(g, list(range(g.m)), copies, g.m)
    active = sorted(set().union(*copies))
    for comp in _edge_components(g, active):
        comp_set = set(comp)
        comp_copies = [es for es in copies if es <= comp_set]
        if not _naive_component_search(g, comp, comp_copies, len(comp)):
            return False
    return True


def _edge_components(g: Graph, edge_indexes: list[int]) -> list[list[int]]:
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edge_indexes:
        u, v = g.edges[e]
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        parent[find(u)] = find(v)
    comps: dict[int, list[int]] = {}
    for e in edge_indexes:
        comps.setdefault(find(g.edges[e][0]), []).append(e)
    return [comps[r] for r in sorted(comps)]


def _connectivity_order(g: Graph, edges: list[int]) -> list[int]:
    # Visit edges so each one touches the already-colored prefix when
    # possible; properness then cuts dead branches sooner.
    remaining = list(edges)
    order = [remaining.pop(0)]
    touched = set(g.edges[order[0]])
    while remaining:
        for i, e in enumerate(remaining):
            u, v = g.edges[e]
            if u in touched or v in touched:
                order.append(remaining.pop(i))
                touched.update((u, v))
                break
        else:
            e = remaining.pop(0)
            order.append(e)
            touched.update(g.edges[e])
    return order


def _naive_component_search(g: Graph, edges: list[int], copies, palette_size: int) -> bool:
    # Same enumeration as _naive_component_search_py, compiled: position i
    # of the connectivity order gets colors 1..palette in turn, properness
    # checked against incident assigned edges, full copies checked at leaves.
    active = _connectivity_order(g, edges)
    slot = {e: i for i, e in enumerate(active)}
    eu = np.array([g.edges[e][0] for e in active], dtype=np.int64)
    ev = np.array([g.edges[e][1] for e in active], dtype=np.int64)
    widths = {len(es) for es in copies}
    assert len(widths) == 1
    width = widths.pop()
    flat = np.array(
        [slot[e] for es in copies for e in sorted(es)], dtype=np.int64
    )
    return bool(
        _exhaust_compiled(eu, ev, g.n, palette_size, flat, width, len(copies))
    )


@njit(cache=True)
def _exhaust_compiled(eu, ev, nvert, palette, cop, width, ncop):
    k = eu.shape[0]
    cur = np.zeros(k, np.int64)
    trial = np.ones(k, np.int64)
    used = np.zeros((nvert, palette + 1), np.uint8)
    pos = 0
    while pos >= 0:
        if pos == k:
            good = True
            for ci in range(ncop):
                base = ci * width
                rainbow = True
                for a in range(width):
                    ca = cur[cop[base + a]]
                    for b in range(a + 1, width):
                        if ca == cur[cop[base + b]]:
                            rainbow = False
                            break
                    if not rainbow:
                        break
                if rainbow:
                    good = False
                    break
            if good:
                return True
            pos -= 1
            c = cur[pos]
            used[eu[pos], c] = 0
            used[ev[pos], c] = 0
            cur[pos] = 0
            continue
        c = trial[pos]
        placed = False
        while c <= palette:
            if used[eu[pos], c] == 0 and used[ev[pos], c] == 0:
                cur[pos] = c
                used[eu[pos], c] = 1
                used[ev[pos], c] = 1
                trial[pos] = c + 1
                pos += 1
                if pos < k:
                    trial[pos] = 1
                placed = True
                break
            c += 1
        if not placed:
            trial[pos] = 1
            pos -= 1
            if pos >= 0:
                c = cur[pos]
                used[eu[pos], c] = 0
                used[ev[pos], c] = 0
                cur[pos] = 0
    return False


def _naive_component_search_py(g: Graph, edges: list[int], copies, palette_size: int) -> bool:
    """Pure-Python twin of the compiled component search, kept to
    cross-validate it."""
    active = _connectivity_order(g, edges)
    palette = range(1, palette_size + 1)
    copy_list = [tuple(es) for es in copies]
    colors: dict[int, int] = {}
    used: list[set[int]] = [set() for _ in range(g.n)]

    def rec(i: int) -> bool:
        if i == len(active):
            for es in copy_list:
                seen = set()
                for e in es:
                    c = colors[e]
                    if c in seen:
                        break
                    seen.add(c)
                else:
                    return False  # this copy came out rainbow
            return True
        e = active[i]
        u, v = g.edges[e]
        for c in palette:
            if c in used[u] or c in used[v]:
                continue
            colors[e] = c
            used[u].add(c)
            used[v].add(c)
            if rec(i + 1):
                return True
            used[u].remove(c)
            used[v].remove(c)
            del colors[e]
        return False

    return rec(0)


def naive_restricted_growth_count(g: Graph, pat: Pattern) -> int:
    """Count rainbow-free proper colorings up to relabeling by enumerating
    every restricted-growth proper coloring (no pruning) and filtering
    rainbow-free leaves."""
    copies = brute_copies(g, pat)
    used: list[set[int]] = [set() for _ in range(g.n)]
    colors = [0] * g.m
    count = 0

    def rec(i: int, next_new: int) -> None:
        nonlocal count
        if i == g.m:
            for es in copies:
                cs = [colors[e] for e in es]
                if len(set(cs)) == len(cs):
                    return
            count += 1
            return
        u, v = g.edges[i]
        for c in range(next_new + 1):
            if c in used[u] or c in used[v]:
                continue
            colors[i] = c
            used[u].add(c)
            used[v].add(c)
            rec(i + 1, next_new + 1 if c == next_new else next_new)
            used[u].remove(c)
            used[v].remove(c)
        return

    rec(0, 0)
    return count


def classical_k3_saturated(g: Graph) -> bool:
    """Classical (uncolored) K3-saturation: triangle-free, and every added
    edge closes a triangle."""
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            return False
    for u, v in g.non_edges():
        if not (g.adj[u] & g.adj[v]):
            return False
    return True


def classical_sat_k3_value(n: int) -> int:
    """Classical sat(n, K3) by raw scan over all labeled graphs in
    increasing edge count (no isomorphism dedup: this stays independent)."""
    all_pairs = list(combinations(range(n), 2))
    for m in range(len(all_pairs) + 1):
        for chosen in combinations(all_pairs, m):
            if classical_k3_saturated(build_graph(n, chosen)):
                return m
    raise AssertionError("no saturated graph found")


def graphs_by_edge_count(max_m: int) -> dict[int, list[Graph]]:
    """All graphs with 1..max_m edges and no isolated vertices, one per
    isomorphism class. Grown edge by edge (new edge between existing
    vertices, to one fresh vertex, or as a fresh K2), deduplicated by
    refinement-hash buckets confirmed with networkx isomorphism."""
    levels: dict[int, list[Graph]] = {1: [build_graph(2, [(0, 1)])]}
    for m in range(1, max_m):
        buckets: dict[str, list[Graph]] = {}
        for g in levels[m]:
            for g2 in _one_edge_extensions(g):
                h = isomorphism_hash(g2)
                bucket = buckets.setdefault(h, [])
                nxg2 = to_networkx(g2)
                if not any(nx.is_isomorphic(nxg2, to_networkx(b)) for b in bucket):
                    bucket.append(g2)
        levels[m + 1] = [g for _, bucket in sorted(buckets.items()) for g in bucket]
    return levels


def _one_edge_extensions(g: Graph):
    for u, v in g.non_edges():
        yield build_graph(g.n, g.edges + ((u, v),))
    for v in range(g.n):
        yield build_graph(g.n + 1, g.edges + ((v, g.n),))
    yield build_graph(g.n + 2, g.edges + ((g.n, g.n + 1),))
