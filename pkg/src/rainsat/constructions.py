"""Generators for the saturated graph families, with their colorings.

Each family ships with role labels and, where the construction dictates
one, an edge-coloring that is proper and rainbow-free for the family's
pattern. Closed-form edge counts live in closed_forms and are exact
rationals; generated instances must match them edge for edge.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .coloring import EdgeColoring, is_proper
from .graph import Graph, build_graph
from .hypercube import build_folded_hypercube
from .patterns import Pattern
from .solver import FOUND, solve_with_fixed


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameterized identifier of a graph family instance.

    Compact text form: "k4:n=10", "kr:r=4,n=31", "path:k=6,n=20",
    "p5:n=8", "cycle:k=7,n=19".
    """

    family: str
    params: dict = field(hash=False)

    _FAMILIES = {"k4": ("n",), "kr": ("r", "n"), "path": ("k", "n"), "p5": ("n",), "cycle": ("k", "n")}

    @staticmethod
    def parse(text: str) -> "ConstructionSpec":
        m = re.fullmatch(r"(\w+):((?:\w+=\d+)(?:,\w+=\d+)*)", text.strip())
        if not m:
            raise ValueError(f"cannot parse construction spec {text!r}")
        family = m.group(1).lower()
        if family not in ConstructionSpec._FAMILIES:
            raise ValueError(f"unknown construction family {family!r}")
        params = {}
        for item in m.group(2).split(","):
            k, v = item.split("=")
            params[k] = int(v)
        want = ConstructionSpec._FAMILIES[family]
        if tuple(sorted(params)) != tuple(sorted(want)):
            raise ValueError(f"family {family!r} takes parameters {want}, got {tuple(params)}")
        return ConstructionSpec(family, params)

    def __str__(self) -> str:
        keys = self._FAMILIES[self.family]
        return f"{self.family}:" + ",".join(f"{k}={self.params[k]}" for k in keys)

    def edge_count(self) -> int:
        return int(closed_forms(f"construction_edge_count({self})"))

    def build(self) -> "ColoredConstruction":
        if self.family == "k4":
            return construct_k4_family(self.params["n"])
        if self.family == "kr":
            return construct_kr_family(self.params["r"], self.params["n"])
        if self.family == "path":
            return construct_path_family(self.params["k"], self.params["n"])
        if self.family == "p5":
            return construct_p5_family(self.params["n"])
        return construct_cycle_family(self.params["k"], self.params["n"])

    def pattern(self) -> Pattern:
        if self.family == "k4":
            return Pattern.clique(4)
        if self.family == "kr":
            return Pattern.clique(self.params["r"] + 1)
        if self.family == "path":
            return Pattern.path(self.params["k"])
        if self.family == "p5":
            return Pattern.path(5)
        return Pattern.cycle(self.params["k"])


@dataclass(frozen=True)
class ColoredConstruction:
    spec: ConstructionSpec
    graph: Graph
    coloring: EdgeColoring | None
    labels: dict


# --- K4 family ---------------------------------------------------------------

def _k6_matchings() -> list[list[tuple[int, int]]]:
    # Round-robin one-factorization of K6 on local labels 0..5 with 5 fixed;
    # matching t contains (5, t), so matching 0 holds the edge {5, 0}.
    out = []
    for t in range(5):
        matching = [(5, t)]
        for i in (1, 2):
            matching.append(tuple(sorted(((t + i) % 5, (t - i) % 5))))
        out.append(matching)
    return out


def construct_k4_family(n: int) -> ColoredConstruction:
    """K2 = {x, y} joined to a disjoint union of K4 components plus a
    remainder component of size (n-2) mod 4. Full components are colored by
    the perfect matching decomposition of their K6 block with c(xy) = 0
    shared and four fresh colors per component; the remainder block is
    colored by an exhaustive search over the block with c(xy) fixed,
    which finds a rainbow-K4-free proper coloring using at most 4 new
    colors."""
    if n < 6:
        raise ValueError(f"k4 family needs n >= 6, got {n}")
    x, y = 0, 1
    full = (n - 2) // 4
    rem = (n - 2) % 4
    comp_vertices = []
    base = 2
    for _ in range(full):
        comp_vertices.append(tuple(range(base, base + 4)))
        base += 4
    rem_vertices = tuple(range(base, base + rem))

    pairs: list[tuple[int, int]] = [(x, y)]
    colors: list[int] = [0]
    matchings = _k6_matchings()
    for i, comp in enumerate(comp_vertices):
        local = {5: x, 0: y, 1: comp[0], 2: comp[1], 3: comp[2], 4: comp[3]}
        for t, matching in enumerate(matchings):
            color = 0 if t == 0 else 4 * i + t
            for a, b in matching:
                u, v = local[a], local[b]
                if (u, v) == (x, y) or (u, v) == (y, x):
                    continue  # xy already placed with color 0
                pairs.append((u, v))
                colors.append(color)

    if rem:
        block_pairs = list(combinations(range(rem + 2), 2))
        block = build_graph(rem + 2, block_pairs)
        out = solve_with_fixed(block, Pattern.clique(4), {block.edge_index(0, 1): 0}, max_colors=5)
        if out.verdict != FOUND:
            raise AssertionError("remainder block admits no rainbow-K4-free coloring")
        local = [x, y, *rem_vertices]
        for (a, b), c in zip(block_pairs, out.coloring):
            if (a, b) == (0, 1):
                continue
            pairs.append((local[a], local[b]))
            colors.append(0 if c == 0 else 4 * full + c)

    g = build_graph(n, pairs)
    spec = ConstructionSpec("k4", {"n": n})
    if g.m != spec.edge_count():
        raise AssertionError(f"edge count {g.m} != closed form {spec.edge_count()}")
    labels = {
        "x": x,
        "y": y,
        "components": tuple(comp_vertices),
        "remainder": rem_vertices,
    }
    return ColoredConstruction(spec, g, tuple(colors), labels)


# --- general clique family ---------------------------------------------------

def kr_part_sizes(r: int, n: int) -> list[int]:
    """Part sizes of the complete multipartite clique construction:
    one singleton, then i*C(i-1,2)+1 for i = 3..r, then the leftover."""
    sizes = [1] + [i * comb(i - 1, 2) + 1 for i in range(3, r + 1)]
    leftover = n - sum(sizes)
    return sizes + [leftover]


def kr_min_n(r: int) -> int:
    return r * comb(r - 1, 2) + 2 + sum(i * comb(i - 1, 2) + 1 for i in range(3, r + 1))


def construct_kr_family(r: int, n: int) -> ColoredConstruction:
    """Complete multipartite graph whose join of parts is rainbow
    K_{r+1}-saturated; being K_{r+1}-free outright, any proper coloring
    works, so a greedy first-fit coloring is attached."""
    if r < 3:
        raise ValueError(f"kr family needs r >= 3, got {r}")
    if n < kr_min_n(r):
        raise ValueError(f"kr family with r={r} needs n >= {kr_min_n(r)}, got {n}")
    sizes = kr_part_sizes(r, n)
    part_of = []
    for i, s in enumerate(sizes):
        part_of += [i] * s
    pairs = [(u, v) for u, v in combinations(range(n), 2) if part_of[u] != part_of[v]]
    g = build_graph(n, pairs)
    spec = ConstructionSpec("kr", {"r": r, "n": n})
    if g.m != spec.edge_count():
        raise AssertionError(f"edge count {g.m} != closed form {spec.edge_count()}")
    parts = []
    base = 0
    for s in sizes:
        parts.append(tuple(range(base, base + s)))
        base += s
    return ColoredConstruction(spec, g, greedy_proper_coloring(g), {"parts": tuple(parts)})


# --- path families -----------------------------------------------------------

def construct_path_family(k: int, n: int) -> ColoredConstruction:
    """Folded hypercube core under its bit-flip coloring, with k-2 pendant
    edges per core vertex (the all-zeros class absorbs the surplus).
    Pendant edges take the lowest colors above the core palette, per
    attachment vertex; any proper extension of a rainbow-free core is
    rainbow-free."""
    if k < 6:
        raise ValueError(f"path family needs k >= 6, got {k}")
    if n < (k - 1) * (1 << (k - 4)):
        raise ValueError(f"path family with k={k} needs n >= {(k - 1) * (1 << (k - 4))}, got {n}")
    w = k - 3
    f = build_folded_hypercube(w)
    core_n = f.graph.n
    pairs = list(f.graph.edges)
    colors = list(f.bitflip)
    pendant_counts = [k - 2] * core_n
    pendant_counts[0] = n - (k - 1) * (1 << (k - 4)) + k - 2
    pendants: list[tuple[int, ...]] = []
    nxt = core_n
    for v in range(core_n):
        mine = []
        for j in range(pendant_counts[v]):
            pairs.append((v, nxt))
            colors.append(w + 1 + j)
            mine.append(nxt)
            nxt += 1
        pendants.append(tuple(mine))
    g = build_graph(n, pairs)
    spec = ConstructionSpec("path", {"k": k, "n": n})
    if g.m != spec.edge_count():
        raise AssertionError(f"edge count {g.m} != closed form {spec.edge_count()}")
    labels = {"core": tuple(range(core_n)), "zero_vertex": 0, "pendants": tuple(pendants)}
    return ColoredConstruction(spec, g, tuple(colors), labels)


def construct_p5_family(n: int) -> ColoredConstruction:
    """K4 core under its perfect matching coloring with n-4 pendant edges
    on one core vertex; pendant colors avoid the three core colors at the
    attachment vertex."""
    if n < 8:
        raise ValueError(f"p5 family needs n >= 8, got {n}")
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    colors = [1, 2, 3, 3, 2, 1]
    for i, p in enumerate(range(4, n)):
        pairs.append((0, p))
        colors.append(4 + i)
    g = build_graph(n, pairs)
    spec = ConstructionSpec("p5", {"n": n})
    if g.m != spec.edge_count():
        raise AssertionError(f"edge count {g.m} != closed form {spec.edge_count()}")
    labels = {"core": (0, 1, 2, 3), "attach": 0, "pendants": tuple(range(4, n))}
    return ColoredConstruction(spec, g, tuple(colors), labels)


# --- odd cycle family --------------------------------------------------------

def construct_cycle_family(k: int, n: int) -> ColoredConstruction:
    """K_{(k-1)/2} joined to an independent set; with fewer than k/2 clique
    vertices there is no odd cycle of length k or more, so any proper
    coloring works and a greedy one is attached."""
    if k % 2 == 0:
        raise ValueError(f"cycle family needs odd k, got {k}")
    if k < 7:
        raise ValueError(f"cycle family needs k >= 7, got {k}")
    if n < 3 * k - 2:
        raise ValueError(f"cycle family with k={k} needs n >= {3 * k - 2}, got {n}")
    h = (k - 1) // 2
    pairs = list(combinations(range(h), 2))
    pairs += [(i, j) for i in range(h) for j in range(h, n)]
    g = build_graph(n, pairs)
    spec = ConstructionSpec("cycle", {"k": k, "n": n})
    if g.m != spec.edge_count():
        raise AssertionError(f"edge count {g.m} != closed form {spec.edge_count()}")
    labels = {"x_labels": tuple(range(h)), "y_labels": tuple(range(h, n))}
    return ColoredConstruction(spec, g, greedy_proper_coloring(g), labels)


# --- colorings ---------------------------------------------------------------

def greedy_proper_coloring(g: Graph) -> EdgeColoring:
    """First-fit proper coloring in edge index order."""
    vused = [0] * g.n
    out = []
    for u, v in g.edges:
        taken = vused[u] | vused[v]
        c = (~taken & -(~taken)).bit_length() - 1  # lowest clear bit
        out.append(c)
        vused[u] |= 1 << c
        vused[v] |= 1 << c
    return tuple(out)


def random_proper_coloring(g: Graph, rng: random.Random) -> EdgeColoring:
    """Proper coloring sampled by visiting edges in random order and picking
    a uniformly random feasible color from a palette wide enough that the
    greedy step never blocks."""
    palette = max((g.degree(u) + g.degree(v) - 1 for u, v in g.edges), default=1)
    order = list(range(g.m))
    rng.shuffle(order)
    vused = [0] * g.n
    out = [0] * g.m
    for e in order:
        u, v = g.edges[e]
        taken = vused[u] | vused[v]
        avail = [c for c in range(palette) if not taken >> c & 1]
        c = rng.choice(avail)
        out[e] = c
        vused[u] |= 1 << c
        vused[v] |= 1 << c
    return tuple(out)


def all_distinct_coloring(g: Graph) -> EdgeColoring:
    return tuple(range(g.m))


# --- greedy rainbow cycle ----------------------------------------------------

def greedy_rainbow_cycle(
    g: Graph,
    colors: EdgeColoring,
    k: int,
    x_labels: tuple[int, ...],
    y_labels: tuple[int, ...],
) -> tuple[int, ...] | None:
    """Run the greedy procedure that exhibits a rainbow C_k in the cycle
    construction plus one Y-Y edge: start from a rainbow path x1-y1-y2-x2
    through the added edge, then repeatedly pick a fresh Y vertex joined to
    the frontier by two edges whose colors are unused (ties broken by lowest
    vertex index), closing back through the last pick.

    Returns the k-cycle's vertex sequence, or None if some greedy set comes
    up empty (which the counting argument rules out at the warranted sizes).
    """
    if not is_proper(g, colors):
        raise ValueError("greedy_rainbow_cycle requires a proper coloring")
    h = (k - 1) // 2
    if len(x_labels) != h:
        raise ValueError(f"expected {h} clique vertices for k={k}, got {len(x_labels)}")
    yset = set(y_labels)
    yy = [(u, v) for u, v in g.edges if u in yset and v in yset]
    if len(yy) != 1:
        raise ValueError(f"expected exactly one Y-Y edge, found {len(yy)}")
    y1, y2 = yy[0]
    c_mid = colors[g.edge_index(y1, y2)]

    start = None
    for a in x_labels:
        for b in x_labels:
            if a == b:
                continue
            ca = colors[g.edge_index(a, y1)]
            cb = colors[g.edge_index(b, y2)]
            if len({ca, c_mid, cb}) == 3:
                start = (a, b, ca, cb)
                break
        if start:
            break
    if start is None:
        return None
    x1, x2, ca, cb = start
    cycle = [x1, y1, y2, x2]
    used_colors = {ca, c_mid, cb}
    used_vertices = set(cycle)
    xs = [x for x in x_labels if x not in (x1, x2)]

    frontier = x2
    for nxt in xs:
        pick = None
        for y in sorted(yset - used_vertices):
            c1 = colors[g.edge_index(frontier, y)]
            c2 = colors[g.edge_index(y, nxt)]
            if c1 not in used_colors and c2 not in used_colors:
                pick = (y, c1, c2)
                break
        if pick is None:
            return None
        y, c1, c2 = pick
        cycle += [y, nxt]
        used_colors |= {c1, c2}
        used_vertices |= {y, nxt}
        frontier = nxt

    pick = None
    for y in sorted(yset - used_vertices):
        c1 = colors[g.edge_index(frontier, y)]
        c2 = colors[g.edge_index(y, x1)]
        if c1 not in used_colors and c2 not in used_colors:
            pick = (y, c1, c2)
            break
    if pick is None:
        return None
    y, c1, c2 = pick
    cycle.append(y)

    if len(cycle) != k or len(set(cycle)) != k:
        raise AssertionError("greedy procedure produced a malformed cycle")
    cyc_colors = [colors[g.edge_index(cycle[i], cycle[(i + 1) % k])] for i in range(k)]
    if len(set(cyc_colors)) != k:
        raise AssertionError("greedy procedure produced a non-rainbow cycle")
    return tuple(cycle)


# --- join extension audit ----------------------------------------------------

def audit_clique_extension(r: int, trials: int, seed: int, exhaustive: bool | None = None) -> bool:
    """Check that fixing a rainbow K_r inside K_r joined to r*C(r-1,2)+1
    independent vertices forces a rainbow K_{r+1} through some join vertex,
    over seeded random proper extensions; for r = 3 an exhaustive search
    over all proper extensions is run as well."""
    if r < 3:
        raise ValueError(f"audit needs r >= 3, got {r}")
    q = r * comb(r - 1, 2) + 1
    pairs = list(combinations(range(r), 2))
    cliq_m = len(pairs)
    pairs += [(i, r + j) for i in range(r) for j in range(q)]
    g = build_graph(r + q, pairs)
    clique_colors = {e: e + 1 for e in range(cliq_m)}

    rng = random.Random(seed)
    palette = g.m
    for _ in range(trials):
        vused = [0] * g.n
        cols = [0] * g.m
        for e in range(cliq_m):
            c = clique_colors[e]
            u, v = g.edges[e]
            cols[e] = c
            vused[u] |= 1 << c
            vused[v] |= 1 << c
        order = list(range(cliq_m, g.m))
        rng.shuffle(order)
        for e in order:
            u, v = g.edges[e]
            taken = vused[u] | vused[v]
            avail = [c for c in range(1, palette + 1) if not taken >> c & 1]
            c = rng.choice(avail)
            cols[e] = c
            vused[u] |= 1 << c
            vused[v] |= 1 << c
        if not _has_rainbow_top(g, cols, r, q, cliq_m):
            return False

    if exhaustive is None:
        exhaustive = r == 3
    if exhaustive:
        out = solve_with_fixed(g, Pattern.clique(r + 1), clique_colors)
        if out.verdict == FOUND:
            return False
    return True


def _has_rainbow_top(g: Graph, cols: list[int], r: int, q: int, cliq_m: int) -> bool:
    clique_colors = set(cols[:cliq_m])
    for j in range(q):
        v = r + j
        mine = {cols[g.edge_index(i, v)] for i in range(r)}
        if len(mine) == r and not mine & clique_colors:
            return True
    return False


# --- closed forms ------------------------------------------------------------

def closed_forms(query: str) -> Fraction:
    """Evaluate one of the named closed forms exactly.

    Queries: k4_lower(n, alpha), k4_upper_slope, kr_lower_slope(r),
    kr_upper_poly_slope(r), kr_mindeg_slope(r, t), path_lower(n),
    path_upper(k, n), cycle_upper(k, n), construction_edge_count(spec).
    Numeric arguments may be integers or fractions like 1/8.
    """
    text = query.strip()
    m = re.fullmatch(r"(\w+)(?:\((.*)\))?", text)
    if not m:
        raise ValueError(f"cannot parse closed-form query {query!r}")
    name = m.group(1)
    inner = m.group(2) or ""

    if name == "construction_edge_count":
        # The argument is one construction spec, commas and all.
        if not inner.strip():
            raise ValueError("construction_edge_count takes one construction spec")
        return Fraction(_construction_edge_count(ConstructionSpec.parse(inner)))

    raw_args = [a.strip() for a in inner.split(",") if a.strip()]

    args = [Fraction(a) for a in raw_args]

    def want(n_args: int) -> None:
        if len(args) != n_args:
            raise ValueError(f"{name} takes {n_args} argument(s), got {len(args)}")

    if name == "k4_lower":
        want(2)
        n, alpha = args
        return Fraction(7, 2) * n - 8 * alpha * n
    if name == "k4_upper_slope":
        want(0)
        return Fraction(7, 2)
    if name == "kr_lower_slope":
        want(1)
        return args[0] - 1
    if name == "kr_upper_poly_slope":
        want(1)
        r = args[0]
        return (r**4 - 2 * r**3 - r**2 + 10 * r - 8) / Fraction(8)
    if name == "kr_mindeg_slope":
        want(2)
        r, t = args
        return (r + t - 2) / Fraction(2)
    if name == "path_lower":
        want(1)
        return args[0] - 1
    if name == "path_upper":
        want(2)
        k, n = args
        if k < 5:
            raise ValueError("path_upper needs k >= 5")
        if k == 5:
            return n + 2
        return n + (k - 5) * Fraction(2) ** (int(k) - 5)
    if name == "cycle_upper":
        want(2)
        k, n = args
        return (k - 1) / Fraction(2) * n - Fraction(comb((int(k) + 1) // 2, 2))
    raise ValueError(f"unknown closed-form query {name!r}")


def _construction_edge_count(spec: ConstructionSpec) -> int:
    p = spec.params
    if spec.family == "k4":
        n = p["n"]
        rem = (n - 2) % 4
        return 1 + 2 * (n - 2) + 6 * ((n - 2) // 4) + comb(rem, 2)
    if spec.family == "kr":
        sizes = kr_part_sizes(p["r"], p["n"])
        n = p["n"]
        return (n * n - sum(s * s for s in sizes)) // 2
    if spec.family == "path":
        k, n = p["k"], p["n"]
        return n + (k - 5) * (1 << (k - 5))
    if spec.family == "p5":
        return p["n"] + 2
    k, n = p["k"], p["n"]
    return (k - 1) // 2 * n - comb((k + 1) // 2, 2)
