"""Isomorphism keys for small graphs.

canonical_key minimizes the upper-triangle adjacency encoding over vertex
orderings, restricted to orderings that respect the color-refinement
partition (an isomorphism-invariant restriction, so the minimum is the same
for isomorphic graphs). Exact only for n <= 16; larger graphs should use
isomorphism_hash, which never produces false negatives but may collide.
"""

from __future__ import annotations

import hashlib

from .graph import Graph

EXACT_MODE_MAX_N = 16


def _refined_partition(g: Graph) -> list[int]:
    """Stable color-refinement classes, canonically numbered by sorted
    signature order (so corresponding classes of isomorphic graphs get the
    same ids)."""
    colors = [g.degree(v) for v in range(g.n)]
    ids = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [ids[c] for c in colors]
    while True:
        sigs = []
        for v in range(g.n):
            nb = tuple(sorted(colors[u] for u in g.neighbors(v)))
            sigs.append((colors[v], nb))
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ids[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_key(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (n <= 16)."""
    n = g.n
    if n > EXACT_MODE_MAX_N:
        raise ValueError(
            f"canonical_key exact mode is limited to n <= {EXACT_MODE_MAX_N} "
            f"(got n={n}); use isomorphism_hash for a hash-only key"
        )
    if n == 0:
        return b"\x00"
    colors = _refined_partition(g)
    by_class: dict[int, list[int]] = {}
    for v in range(n):
        by_class.setdefault(colors[v], []).append(v)
    pos_class: list[int] = []
    for c in sorted(by_class):
        pos_class += [c] * len(by_class[c])

    INF = 1 << 20  # larger than any row value (rows < 2^15)
    best = [INF] * n
    rows = [0] * n
    order = [0] * n
    used = [False] * n
    adj = g.adj

    def rec(p: int) -> None:
        # Invariant: rows[0..p-1] == best[0..p-1].
        if p == n:
            return
        for v in by_class[pos_class[p]]:
            if used[v]:
                continue
            r = 0
            av = adj[v]
            for q in range(p):
                r = r << 1 | (av >> order[q] & 1)
            if r > best[p]:
                continue
            if r < best[p]:
                best[p] = r
                for q in range(p + 1, n):
                    best[q] = INF
            used[v] = True
            order[p] = v
            rows[p] = r
            rec(p + 1)
            used[v] = False

    rec(0)
    return bytes([n]) + b"".join(r.to_bytes(2, "big") for r in best)


def graph_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All adjacency-preserving vertex permutations, as image tuples.

    Backtracking over a connectivity-friendly vertex order; each candidate
    image must match the placed prefix's adjacency exactly. Intended for
    the desk-scale hosts (n <= ~32) where uniqueness arguments need orbit
    reduction.
    """
    n = g.n
    if n == 0:
        return [()]
    order: list[int] = []
    placed = 0
    for _ in range(n):
        best, best_key = -1, (-1, -1)
        for v in range(n):
            if placed >> v & 1:
                continue
            key = ((g.adj[v] & placed).bit_count(), g.degree(v))
            if key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    degs = g.degrees()
    adj = g.adj
    image = [0] * n
    out: list[tuple[int, ...]] = []
    full = (1 << n) - 1

    def rec(i: int, used: int) -> None:
        if i == n:
            perm = [0] * n
            for j, pv in enumerate(order):
                perm[pv] = image[j]
            out.append(tuple(perm))
            return
        pv = order[i]
        cand = ~used & full
        for j in range(i):
            if adj[pv] >> order[j] & 1:
                cand &= adj[image[j]]
            else:
                cand &= ~adj[image[j]]
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            if degs[w] == degs[pv]:
                image[i] = w
                rec(i + 1, used | low)

    rec(0, 0)
    return out


_HASH_ROUNDS = 3


def isomorphism_hash(g: Graph) -> str:
    """Color-refinement hash after a fixed number of rounds: equal for
    isomorphic graphs, collisions possible (callers needing exactness must
    confirm with a real isomorphism test or canonical_key)."""
    colors = [str(g.degree(v)) for v in range(g.n)]
    for _ in range(_HASH_ROUNDS):
        digests: dict[str, str] = {}
        sigs = []
        for v in range(g.n):
            sig = colors[v] + "|" + ",".join(sorted(colors[u] for u in g.neighbors(v)))
            d = digests.get(sig)
            if d is None:
                d = hashlib.sha256(sig.encode()).hexdigest()[:16]
                digests[sig] = d
            sigs.append(d)
        colors = sigs
    blob = f"{g.n};{g.m};" + "|".join(sorted(colors))
    return hashlib.sha256(blob.encode()).hexdigest()
