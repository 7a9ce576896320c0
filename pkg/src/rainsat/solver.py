"""Exhaustive decision and enumeration of rainbow-free proper edge-colorings.

Completeness rests on two facts. First, a proper coloring of a graph with m
edges uses at most m colors, so the palette {0..m-1} loses nothing. Second,
every coloring is equivalent under color relabeling to exactly one coloring
whose colors appear in first-use order along the search sequence, so a
backtracking search over these restricted-growth colorings visits one
representative of every relabeling class. A branch is cut when a fully
colored copy of the pattern is rainbow, or when some copy has all but one
edge colored with pairwise distinct colors and the remaining edge has no
feasible color left: in a rainbow-free completion that edge must repeat one
of the copy's colors, which is recorded as a forced-repeat constraint.

Colorings may be searched against a fixed partial assignment (the fixed
colors keep their external names; new colors grow in first-use order above
them), which serves recoloring checks and precolored construction blocks.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .coloring import EdgeColoring, canonicalize_colors, find_rainbow_copy, is_proper
from .graph import Graph
from .patterns import Pattern, enumerate_copies

FOUND = "found"
NONE_EXISTS = "none-exists"
BUDGET_EXCEEDED = "budget-exceeded"


class SearchBudgetExceeded(RuntimeError):
    """Raised by boolean-valued checks that cannot report a partial verdict."""


@dataclass(frozen=True)
class Budget:
    """Node-count and wall-clock limits; whichever trips first ends the
    search with a budget-exceeded verdict, never a silent wrong answer."""

    max_nodes: int | None = None
    max_ms: float | None = None

    def covers(self, other: "Budget") -> bool:
        """True if a verdict computed under self is valid under other."""
        if self.max_nodes is not None and (other.max_nodes is None or other.max_nodes > self.max_nodes):
            return False
        if self.max_ms is not None and (other.max_ms is None or other.max_ms > self.max_ms):
            return False
        return True

    def to_json(self) -> dict:
        return {"max_nodes": self.max_nodes, "max_ms": self.max_ms}


@dataclass
class SearchOutcome:
    verdict: str  # FOUND | NONE_EXISTS | BUDGET_EXCEEDED
    coloring: EdgeColoring | None = None
    nodes: int = 0
    elapsed_ms: float = 0.0

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "nodes": self.nodes, "ms": round(self.elapsed_ms, 3)}
        if self.coloring is not None:
            out["witness"] = list(self.coloring)
        return out


@dataclass
class EnumerationOutcome:
    count: int
    colorings: list[EdgeColoring]
    exhaustive: bool
    nodes: int = 0
    elapsed_ms: float = 0.0

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "exhaustive": self.exhaustive,
            "nodes": self.nodes,
            "ms": round(self.elapsed_ms, 3),
            "colorings": [list(c) for c in self.colorings],
        }


def _copy_edge_sets(g: Graph, pat: Pattern) -> list[tuple[int, ...]]:
    return [tuple(sorted(c.edge_indexes)) for c in enumerate_copies(g, pat)]


def _run_engine(
    g: Graph,
    copy_sets: Sequence[tuple[int, ...]],
    fixed: Mapping[int, int],
    budget: Budget | None,
    max_colors: int | None,
    mode: str,
    collect_limit: int | None,
) -> dict:
    m = g.m
    ev = g.edges

    # Fixed external colors get internal ids in first-use order by edge index.
    ext_palette: list[int] = []
    ext_ids: dict[int, int] = {}
    fixed_items = sorted(fixed.items())
    for _, c in fixed_items:
        if c not in ext_ids:
            ext_ids[c] = len(ext_palette)
            ext_palette.append(c)
    p0 = len(ext_palette)
    free = [e for e in range(m) if e not in fixed]
    cap = max_colors if max_colors is not None else p0 + len(free)
    if cap < p0:
        raise ValueError("max_colors is smaller than the fixed palette")
    full_mask = (1 << cap) - 1

    ncop = [0] * m
    for es in copy_sets:
        for e in es:
            ncop[e] += 1
    # Most-constrained edges first: descending copy membership, ties by index.
    free.sort(key=lambda e: (-ncop[e], e))

    edge_copies: list[tuple[int, ...]] = [()] * m
    buckets: list[list[int]] = [[] for _ in range(m)]
    for k, es in enumerate(copy_sets):
        for e in es:
            buckets[e].append(k)
    for e in range(m):
        edge_copies[e] = tuple(buckets[e])

    nk = len(copy_sets)
    csize = [len(es) for es in copy_sets]
    ccount = [0] * nk
    cmask = [0] * nk
    cdup = [0] * nk
    cxor = [0] * nk
    for k, es in enumerate(copy_sets):
        x = 0
        for e in es:
            x ^= e
        cxor[k] = x

    colors = [-1] * m
    vused = [0] * g.n
    allowed = [full_mask] * m
    trail: list[tuple[int, int, int]] = []

    nodes = 0
    max_nodes = budget.max_nodes if budget else None
    deadline = None
    if budget is not None and budget.max_ms is not None:
        deadline = time.perf_counter() + budget.max_ms / 1000.0
    aborted = False
    found: list[int] | None = None
    count = 0
    collected: list[list[int]] = []
    t0 = time.perf_counter()

    def assign(e: int, u: int, v: int, bit: int) -> bool:
        # ccount/cxor updates are unconditional (reversed wholesale in undo);
        # cmask/cdup/allowed changes go on the trail.
        vused[u] |= bit
        vused[v] |= bit
        ok = True
        for k in edge_copies[e]:
            ccount[k] += 1
            cxor[k] ^= e
            if not ok:
                continue
            if cmask[k] & bit:
                cdup[k] += 1
                trail.append((1, k, 0))
            elif cdup[k]:
                cmask[k] |= bit
                trail.append((0, k, bit))
            else:
                cmask[k] |= bit
                trail.append((0, k, bit))
                cc = ccount[k]
                sz = csize[k]
                if cc == sz:
                    ok = False  # completed copy is rainbow
                elif cc == sz - 1:
                    f = cxor[k]
                    old = allowed[f]
                    na = old & cmask[k]
                    if na != old:
                        trail.append((2, f, old))
                        allowed[f] = na
                    fu, fv = ev[f]
                    if not na & ~(vused[fu] | vused[fv]):
                        ok = False  # forced repeat impossible
        return ok

    def undo(e: int, u: int, v: int, bit: int, tpos: int) -> None:
        for k in edge_copies[e]:
            ccount[k] -= 1
            cxor[k] ^= e
        while len(trail) > tpos:
            kind, a, b = trail.pop()
            if kind == 0:
                cmask[a] ^= b
            elif kind == 1:
                cdup[a] -= 1
            else:
                allowed[a] = b
        vused[u] ^= bit
        vused[v] ^= bit

    # Preload the fixed assignment; a failure here means no completion exists.
    init_ok = True
    for e, c_ext in fixed_items:
        u, v = ev[e]
        bit = 1 << ext_ids[c_ext]
        if (vused[u] | vused[v]) & bit:
            raise ValueError("fixed assignment is not a proper partial coloring")
        colors[e] = ext_ids[c_ext]
        if not assign(e, u, v, bit):
            init_ok = False
            break

    order = free
    nfree = len(order)

    def rec(depth: int, next_new: int) -> bool:
        nonlocal nodes, aborted, found, count
        if depth == nfree:
            if mode == "find":
                found = colors.copy()
                return True
            count += 1
            if collect_limit is None or len(collected) < collect_limit:
                collected.append(colors.copy())
            return False
        e = order[depth]
        u, v = ev[e]
        dom = (1 << next_new) - 1
        if next_new < cap:
            dom |= 1 << next_new
        dom &= ~(vused[u] | vused[v]) & allowed[e]
        while dom:
            bit = dom & -dom
            dom ^= bit
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                aborted = True
                return True
            if deadline is not None and not nodes & 2047 and time.perf_counter() > deadline:
                aborted = True
                return True
            tpos = len(trail)
            c = bit.bit_length() - 1
            colors[e] = c
            if assign(e, u, v, bit):
                stop = rec(depth + 1, next_new + 1 if c == next_new else next_new)
            else:
                stop = False
            undo(e, u, v, bit, tpos)
            colors[e] = -1
            if stop:
                return True
        return False

    if init_ok:
        rec(0, p0)

    elapsed_ms = (time.perf_counter() - t0) * 1000.0

    fresh_base = (max(ext_palette) + 1) if ext_palette else 0

    def to_external(cols: Sequence[int]) -> EdgeColoring:
        return tuple(ext_palette[c] if c < p0 else fresh_base + (c - p0) for c in cols)

    return {
        "found": to_external(found) if found is not None else None,
        "count": count,
        "collected": [to_external(c) for c in collected],
        "aborted": aborted,
        "nodes": nodes,
        "elapsed_ms": elapsed_ms,
    }


def find_rainbow_free_coloring(
    g: Graph, pat: Pattern, budget: Budget | None = None
) -> SearchOutcome:
    """Decide whether g has a proper edge-coloring with no rainbow copy of
    pat. Found witnesses are re-verified before they are returned; a
    none-exists verdict is only emitted after the canonical search space is
    exhausted."""
    copies = _copy_edge_sets(g, pat)
    res = _run_engine(g, copies, {}, budget, None, "find", None)
    if res["found"] is not None:
        witness = canonicalize_colors(res["found"])
        if not is_proper(g, witness) or find_rainbow_copy(g, witness, pat) is not None:
            raise AssertionError("solver produced an invalid witness coloring")
        return SearchOutcome(FOUND, witness, res["nodes"], res["elapsed_ms"])
    if res["aborted"]:
        return SearchOutcome(BUDGET_EXCEEDED, None, res["nodes"], res["elapsed_ms"])
    return SearchOutcome(NONE_EXISTS, None, res["nodes"], res["elapsed_ms"])


def solve_with_fixed(
    g: Graph,
    pat: Pattern,
    fixed: Mapping[int, int],
    budget: Budget | None = None,
    max_colors: int | None = None,
) -> SearchOutcome:
    """find_rainbow_free_coloring with some edges precolored. Fixed colors
    keep their values; colors introduced by the search are numbered above
    the fixed palette. max_colors caps the total number of distinct colors."""
    copies = _copy_edge_sets(g, pat)
    res = _run_engine(g, copies, dict(fixed), budget, max_colors, "find", None)
    if res["found"] is not None:
        witness = res["found"]
        if not is_proper(g, witness) or find_rainbow_copy(g, witness, pat) is not None:
            raise AssertionError("solver produced an invalid witness coloring")
        return SearchOutcome(FOUND, witness, res["nodes"], res["elapsed_ms"])
    if res["aborted"]:
        return SearchOutcome(BUDGET_EXCEEDED, None, res["nodes"], res["elapsed_ms"])
    return SearchOutcome(NONE_EXISTS, None, res["nodes"], res["elapsed_ms"])


def enumerate_rainbow_free_colorings(
    g: Graph,
    pat: Pattern,
    budget: Budget | None = None,
    collect_limit: int | None = None,
) -> EnumerationOutcome:
    """All rainbow-pat-free proper colorings of g up to color relabeling,
    each reported once in canonical (first-use order) form. The count is
    exact iff exhaustive is True; a tripped budget leaves a partial count."""
    copies = _copy_edge_sets(g, pat)
    res = _run_engine(g, copies, {}, budget, None, "enumerate", collect_limit)
    colorings = sorted(canonicalize_colors(c) for c in res["collected"])
    return EnumerationOutcome(
        count=res["count"],
        colorings=colorings,
        exhaustive=not res["aborted"],
        nodes=res["nodes"],
        elapsed_ms=res["elapsed_ms"],
    )


def check_unrestricted(
    g: Graph,
    coloring: Sequence[int],
    edge_indexes: Iterable[int],
    pat: Pattern,
    budget: Budget | None = None,
) -> bool:
    """True iff every properness-preserving recoloring of the given edges
    (the rest of the coloring stays fixed) leaves g rainbow-pat-free.

    Decided by exhausting restricted-growth recolorings of the edge set
    against the fixed complement: recolored edges may reuse any color of the
    complement or take fresh ones, which covers all recolorings up to
    relabeling of the fresh colors.
    """
    cols = tuple(coloring)
    if not is_proper(g, cols):
        raise ValueError("check_unrestricted requires a proper coloring")
    if find_rainbow_copy(g, cols, pat) is not None:
        raise ValueError("check_unrestricted requires a rainbow-free coloring")
    eset = sorted(set(edge_indexes))
    for e in eset:
        if not 0 <= e < g.m:
            raise ValueError(f"edge index {e} out of range")
    inside = set(eset)

    # Only copies whose fixed part is already pairwise distinct can ever
    # become rainbow under a recoloring.
    cands: list[tuple[tuple[int, ...], frozenset[int]]] = []
    for cp in enumerate_copies(g, pat):
        outside = [cols[e] for e in cp.edge_indexes if e not in inside]
        if len(set(outside)) == len(outside):
            cands.append(
                (tuple(e for e in sorted(cp.edge_indexes) if e in inside), frozenset(outside))
            )
    if not cands:
        return True

    ext_palette: list[int] = []
    ext_ids: dict[int, int] = {}
    for e in range(g.m):
        if e not in inside and cols[e] not in ext_ids:
            ext_ids[cols[e]] = len(ext_palette)
            ext_palette.append(cols[e])
    p0 = len(ext_palette)
    cap = p0 + len(eset)

    vused = [0] * g.n
    for e in range(g.m):
        if e not in inside:
            u, v = g.edges[e]
            bit = 1 << ext_ids[cols[e]]
            vused[u] |= bit
            vused[v] |= bit

    assigned: dict[int, int] = {}
    nodes = 0
    max_nodes = budget.max_nodes if budget else None
    deadline = None
    if budget is not None and budget.max_ms is not None:
        deadline = time.perf_counter() + budget.max_ms / 1000.0

    out_masks = []
    for es, outside in cands:
        mask = 0
        for c in outside:
            if c in ext_ids:
                mask |= 1 << ext_ids[c]
        out_masks.append((es, mask))

    def leaf_has_rainbow() -> bool:
        for es, omask in out_masks:
            mask = omask
            ok = True
            for e in es:
                bit = 1 << assigned[e]
                if mask & bit:
                    ok = False
                    break
                mask |= bit
            if ok:
                return True
        return False

    def rec(idx: int, next_new: int) -> bool:
        """Returns True when some recoloring exhibits a rainbow copy."""
        nonlocal nodes
        if idx == len(eset):
            return leaf_has_rainbow()
        e = eset[idx]
        u, v = g.edges[e]
        dom = (1 << next_new) - 1
        if next_new < cap:
            dom |= 1 << next_new
        dom &= ~(vused[u] | vused[v])
        while dom:
            bit = dom & -dom
            dom ^= bit
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise SearchBudgetExceeded("check_unrestricted node budget exhausted")
            if deadline is not None and not nodes & 2047 and time.perf_counter() > deadline:
                raise SearchBudgetExceeded("check_unrestricted time budget exhausted")
            c = bit.bit_length() - 1
            assigned[e] = c
            vused[u] |= bit
            vused[v] |= bit
            hit = rec(idx + 1, next_new + 1 if c == next_new else next_new)
            vused[u] ^= bit
            vused[v] ^= bit
            del assigned[e]
            if hit:
                return True
        return False

    return not rec(0, p0)
