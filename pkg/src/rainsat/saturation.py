"""Saturation verification, exact tabulation, and structural audits.

A graph is rainbow H-saturated when (1) it admits a proper edge-coloring
with no rainbow H-copy and (2) adding any non-edge makes such a coloring
impossible. Condition (2) is decided per non-edge by the exhaustive solver;
a non-edge whose addition creates no new H-copy is an immediate miss, since
the witness coloring of condition (1) extends by one fresh color.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .canonical import canonical_key
from .coloring import find_rainbow_copy, is_proper
from .graph import Graph, build_graph
from .patterns import Pattern, enumerate_copies
from .solver import (
    BUDGET_EXCEEDED,
    FOUND,
    NONE_EXISTS,
    Budget,
    SearchOutcome,
    find_rainbow_free_coloring,
)

SATURATED = "saturated"
NOT_COLORABLE = "not-rainbow-free-colorable"
MISSED_EDGE = "missed-edge"
INCONCLUSIVE = "inconclusive"


@dataclass
class SaturationReport:
    verdict: str
    condition1: SearchOutcome
    per_nonedge: dict[tuple[int, int], SearchOutcome] = field(default_factory=dict)
    missed_edge: tuple[int, int] | None = None
    inconclusive_edges: list[tuple[int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "condition1": self.condition1.to_json(),
            "per_nonedge": {
                f"{u},{v}": o.to_json() for (u, v), o in sorted(self.per_nonedge.items())
            },
        }
        if self.missed_edge is not None:
            out["missed_edge"] = list(self.missed_edge)
        if self.inconclusive_edges:
            out["inconclusive_edges"] = [list(e) for e in self.inconclusive_edges]
        return out


def _creates_new_copy(g_plus: Graph, pat: Pattern, new_index: int) -> bool:
    return any(new_index in c.edge_indexes for c in enumerate_copies(g_plus, pat))


def _nonedge_outcome(args: tuple[Graph, Pattern, Budget | None, tuple[int, int]]) -> tuple[tuple[int, int], str, SearchOutcome]:
    g, pat, budget, (u, v) = args
    g_plus = g.with_edge(u, v)
    if not _creates_new_copy(g_plus, pat, g_plus.m - 1):
        return (u, v), "no-new-copy", SearchOutcome(FOUND, None, 0, 0.0)
    return (u, v), "solved", find_rainbow_free_coloring(g_plus, pat, budget)


def check_saturation(
    g: Graph, pat: Pattern, budget: Budget | None = None, jobs: int = 1
) -> SaturationReport:
    """Verify both saturation conditions. Condition (2) runs independently
    per non-edge (optionally across processes) and outcomes are merged in
    sorted edge order, so reports do not depend on the worker count.
    A definitive counterexample wins over budget-limited edges; Inconclusive
    never promotes to Saturated."""
    cond1 = find_rainbow_free_coloring(g, pat, budget)
    if cond1.verdict == NONE_EXISTS:
        return SaturationReport(NOT_COLORABLE, cond1)
    if cond1.verdict == BUDGET_EXCEEDED:
        return SaturationReport(INCONCLUSIVE, cond1)

    non_edges = g.non_edges()
    tasks = [(g, pat, budget, e) for e in non_edges]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_nonedge_outcome, tasks, chunksize=1))
    else:
        results = [_nonedge_outcome(t) for t in tasks]

    per: dict[tuple[int, int], SearchOutcome] = {}
    missed: tuple[int, int] | None = None
    inconclusive: list[tuple[int, int]] = []
    for (u, v), how, outcome in sorted(results):
        if how == "no-new-copy":
            # G+e inherits the witness with one fresh color on e.
            fresh = (max(cond1.coloring) + 1) if cond1.coloring else 0
            witness = cond1.coloring + (fresh,)
            g_plus = g.with_edge(u, v)
            if not is_proper(g_plus, witness) or find_rainbow_copy(g_plus, witness, pat):
                raise AssertionError("fresh-color extension failed verification")
            outcome = SearchOutcome(FOUND, witness, 0, 0.0)
        per[(u, v)] = outcome
        if outcome.verdict == FOUND and missed is None:
            missed = (u, v)
        elif outcome.verdict == BUDGET_EXCEEDED:
            inconclusive.append((u, v))

    if missed is not None:
        return SaturationReport(MISSED_EDGE, cond1, per, missed, inconclusive)
    if inconclusive:
        return SaturationReport(INCONCLUSIVE, cond1, per, None, inconclusive)
    return SaturationReport(SATURATED, cond1, per)


# --- exact tabulation ---------------------------------------------------------

EXHAUSTIVE_MAX_N = 7


@dataclass
class RsatResult:
    n: int
    pattern: str
    value: int | None
    witness: Graph | None
    graphs_examined: int
    exhaustive: bool

    def to_json(self) -> dict:
        from .formats import encode_graph6

        return {
            "n": self.n,
            "pattern": self.pattern,
            "value": self.value,
            "witness": encode_graph6(self.witness) if self.witness else None,
            "graphs_examined": self.graphs_examined,
            "exhaustive": self.exhaustive,
        }


def rsat_exact(
    n: int,
    pat: Pattern,
    budget: Budget | None = None,
    allow_large: bool = False,
    jobs: int = 1,
) -> RsatResult:
    """Minimum edge count of an n-vertex rainbow-pat-saturated graph, by
    streaming all labeled graphs in increasing edge count, deduplicating by
    canonical key, and verifying saturation. The exhaustive flag is True iff
    no budget tripped below the returned value."""
    if n > EXHAUSTIVE_MAX_N and not allow_large:
        raise ValueError(
            f"rsat_exact is exhaustive only for n <= {EXHAUSTIVE_MAX_N}; "
            f"pass allow_large=True to override"
        )
    all_pairs = list(combinations(range(n), 2))
    examined = 0
    budget_hit_below = False
    for m in range(len(all_pairs) + 1):
        seen: set[bytes] = set()
        for chosen in combinations(all_pairs, m):
            g = build_graph(n, chosen)
            key = canonical_key(g)
            if key in seen:
                continue
            seen.add(key)
            examined += 1
            report = check_saturation(g, pat, budget, jobs=jobs)
            if report.verdict == SATURATED:
                return RsatResult(n, str(pat), m, g, examined, not budget_hit_below)
            if report.verdict == INCONCLUSIVE:
                budget_hit_below = True
    return RsatResult(n, str(pat), None, None, examined, not budget_hit_below)


# --- structural audits ---------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    check: str
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"check": self.check, "vertices": list(self.vertices)}


def audit_structure(g: Graph, pat: Pattern) -> list[Violation]:
    """Audit the structural facts every rainbow K_r-saturated graph must
    satisfy. For r = 4: (a) the common neighborhood of each non-adjacent
    pair contains an edge, (b) vertices of degree at most 3 form a clique,
    (c) no K3-join-E4 subgraph. For every r >= 4: (d) each non-adjacent pair
    has r-1 common neighbors or degree sum at least C(r,2)-1, (e) at most
    one vertex of degree r-2. An empty list means all checks pass."""
    if pat.kind != "clique":
        raise ValueError("audit_structure applies to clique patterns only")
    r = pat.size
    out: list[Violation] = []
    degs = g.degrees()

    if r == 4:
        for u, v in g.non_edges():
            common = g.adj[u] & g.adj[v]
            if not _mask_has_edge(g, common):
                out.append(Violation("common-neighborhood-edge", (u, v)))
        low = [v for v in range(g.n) if degs[v] <= 3]
        for u, v in combinations(low, 2):
            if not g.has_edge(u, v):
                out.append(Violation("low-degree-clique", (u, v)))
        for x, y, z in combinations(range(g.n), 3):
            if g.has_edge(x, y) and g.has_edge(x, z) and g.has_edge(y, z):
                others = g.adj[x] & g.adj[y] & g.adj[z]
                if others.bit_count() >= 4:
                    out.append(Violation("k3-join-e4", (x, y, z)))

    if r >= 4:
        thresh = r * (r - 1) // 2 - 1
        for u, v in g.non_edges():
            if (g.adj[u] & g.adj[v]).bit_count() < r - 1 and degs[u] + degs[v] < thresh:
                out.append(Violation("degree-sum", (u, v)))
        low_deg = tuple(v for v in range(g.n) if degs[v] == r - 2)
        if len(low_deg) > 1:
            out.append(Violation("multiple-degree-r-minus-2", low_deg))

    return out


def _mask_has_edge(g: Graph, mask: int) -> bool:
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        if g.adj[v] & m:
            return True
    return False
