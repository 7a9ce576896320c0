"""Folded hypercubes, bit-flip colorings, and total bit-flip cycles.

The folded hypercube on parameter w lives on the equivalence classes of
{0,1}^w under complementation. Each class is represented by its string with
leading bit 0, stored as the integer whose binary digits are bits 2..w of
that string (most significant first). Flipping bit j >= 2 toggles one digit;
flipping bit 1 lands on the complement class, i.e. toggles every digit.
Every edge therefore carries a bit-flip label in 1..w, and each label class
is a perfect matching.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import graph_automorphisms
from .coloring import EdgeColoring, canonicalize_colors, find_rainbow_copy, is_proper
from .graph import Graph, build_graph
from .patterns import Pattern
from .solver import Budget, enumerate_rainbow_free_colorings


@dataclass(frozen=True)
class FoldedHypercube:
    w: int
    graph: Graph
    bitflip: tuple[int, ...]  # edge index -> bit position in 1..w

    @property
    def zero_vertex(self) -> int:
        """The class of the all-zeros string."""
        return 0

    def flip_mask(self, bit: int) -> int:
        if not 1 <= bit <= self.w:
            raise ValueError(f"bit {bit} out of 1..{self.w}")
        if bit == 1:
            return (1 << (self.w - 1)) - 1
        return 1 << (self.w - bit)

    def neighbor(self, v: int, bit: int) -> int:
        return v ^ self.flip_mask(bit)

    def vertex_string(self, v: int) -> str:
        return "0" + format(v, f"0{self.w - 1}b")


def build_folded_hypercube(w: int) -> FoldedHypercube:
    if w < 3:
        raise ValueError(f"folded hypercube needs w >= 3, got {w}")
    n = 1 << (w - 1)
    pairs: list[tuple[int, int]] = []
    bits: list[int] = []
    for u in range(n):
        for bit in range(1, w + 1):
            mask = ((1 << (w - 1)) - 1) if bit == 1 else (1 << (w - bit))
            v = u ^ mask
            if u < v:
                pairs.append((u, v))
                bits.append(bit)
    g = build_graph(n, pairs)
    return FoldedHypercube(w=w, graph=g, bitflip=tuple(bits))


def bitflip_coloring(f: FoldedHypercube) -> EdgeColoring:
    """Color every edge by its bit-flip label; proper because each label
    class is a perfect matching, and rainbow P_{w+1}-free because a rainbow
    walk of w edges flips every bit once and therefore closes."""
    return f.bitflip


@dataclass(frozen=True)
class Tbfc:
    """A w-cycle whose edges realize all w distinct bit-flips, optionally
    with the edge colors it carried when found."""

    vertices: tuple[int, ...]
    bits: tuple[int, ...]
    edge_indexes: tuple[int, ...]
    colors: tuple[int, ...] | None = None

    @property
    def w(self) -> int:
        return len(self.vertices)

    def is_rainbow(self) -> bool:
        return self.colors is not None and len(set(self.colors)) == len(self.colors)


def find_tbfrc(f: FoldedHypercube, colors: EdgeColoring) -> Tbfc | None:
    """Search for a total bit-flip cycle that is rainbow under the given
    proper coloring. DFS over paths with pairwise distinct bit-flips and
    pairwise distinct colors; None only after that space is exhausted.

    The caller asserts that colors is rainbow P_{w+1}-free; properness is
    checked here.
    """
    g = f.graph
    if not is_proper(g, colors):
        raise ValueError("find_tbfrc requires a proper coloring")
    w = f.w
    masks = [0] + [f.flip_mask(b) for b in range(1, w + 1)]

    path = [0] * w
    path_bits = [0] * w

    def close(start: int, last: int, used_bits: int, used_colors: frozenset) -> Tbfc | None:
        # All but one bit consumed; the closing edge must realize it.
        missing = (((1 << (w + 1)) - 2) & ~used_bits).bit_length() - 1
        if last ^ masks[missing] != start:
            return None
        e = g.edge_index(last, start)
        if colors[e] in used_colors:
            return None
        verts = tuple(path)
        bits = tuple(path_bits[1:]) + (missing,)
        edges = tuple(
            g.edge_index(verts[i], verts[(i + 1) % w]) for i in range(w)
        )
        return Tbfc(verts, bits, edges, tuple(colors[e] for e in edges))

    def extend(depth: int, used_v: int, used_bits: int, used_colors: frozenset) -> Tbfc | None:
        if depth == w:
            return close(path[0], path[depth - 1], used_bits, used_colors)
        u = path[depth - 1]
        for bit in range(1, w + 1):
            if used_bits >> bit & 1:
                continue
            v = u ^ masks[bit]
            if used_v >> v & 1:
                continue
            e = g.edge_index(u, v)
            c = colors[e]
            if c in used_colors:
                continue
            path[depth] = v
            path_bits[depth] = bit
            got = extend(depth + 1, used_v | 1 << v, used_bits | 1 << bit, used_colors | {c})
            if got is not None:
                return got
        return None

    for start in range(g.n):
        path[0] = start
        got = extend(1, 1 << start, 0, frozenset())
        if got is not None:
            return got
    return None


def extend_tbfrc(f: FoldedHypercube, t: Tbfc) -> EdgeColoring:
    """The unique rainbow P_{w+1}-free proper coloring of the folded
    hypercube agreeing with a rainbow total bit-flip cycle (w >= 5): after
    aligning color names with the cycle's bit order, every edge receives the
    color of its own bit-flip. The result is verified before it is returned.
    """
    if f.w < 5:
        raise ValueError(f"extend_tbfrc needs w >= 5, got {f.w}")
    if t.colors is None or not t.is_rainbow():
        raise ValueError("extend_tbfrc needs a rainbow total bit-flip cycle")
    if sorted(t.bits) != list(range(1, f.w + 1)):
        raise ValueError("cycle does not realize every bit-flip exactly once")
    colormap = dict(zip(t.bits, t.colors))
    out = tuple(colormap[b] for b in f.bitflip)
    if not is_proper(f.graph, out):
        raise AssertionError("extension is not proper")
    if find_rainbow_copy(f.graph, out, Pattern.path(f.w + 1)) is not None:
        raise AssertionError("extension contains a rainbow path it must avoid")
    return out


@dataclass
class UniquenessReport:
    """Count of rainbow P_{w+1}-free colorings of the folded hypercube.

    count is taken up to color relabeling and host automorphism, which is
    the sense in which the coloring is unique (the uniqueness argument
    relabels vertices as well as colors); relabel_count keeps the finer
    relabeling-only count from the enumerator.
    """

    w: int
    count: int
    relabel_count: int
    exhaustive: bool
    nodes: int
    elapsed_ms: float

    def to_json(self) -> dict:
        return {
            "w": self.w,
            "count": self.count,
            "relabel_count": self.relabel_count,
            "exhaustive": self.exhaustive,
            "nodes": self.nodes,
            "ms": round(self.elapsed_ms, 3),
        }


def verify_unique_coloring(w: int, budget: Budget | None = None) -> UniquenessReport:
    """Exhaustively enumerate rainbow P_{w+1}-free proper colorings of the
    folded hypercube and reduce them to automorphism orbits; the theory
    predicts exactly one orbit. A tripped budget yields a flagged partial
    count, never a silent claim."""
    f = build_folded_hypercube(w)
    g = f.graph
    res = enumerate_rainbow_free_colorings(g, Pattern.path(w + 1), budget=budget)
    if not res.colorings:
        return UniquenessReport(w, 0, res.count, res.exhaustive, res.nodes, res.elapsed_ms)
    autos = graph_automorphisms(g)
    reps: set[EdgeColoring] = set()
    for coloring in res.colorings:
        best = None
        for perm in autos:
            moved = tuple(
                coloring[g.edge_index(perm[u], perm[v])] for u, v in g.edges
            )
            cand = canonicalize_colors(moved)
            if best is None or cand < best:
                best = cand
        reps.add(best)
    return UniquenessReport(w, len(reps), res.count, res.exhaustive, res.nodes, res.elapsed_ms)


def nice_path(
    f: FoldedHypercube,
    start: int,
    avoid_bit: int | None = None,
    avoid_vertex: int | None = None,
) -> tuple[int, ...]:
    """A path of length w-1 from start whose edges realize pairwise distinct
    bit-flips, omitting the given bit or avoiding the given vertex. Rainbow
    under the bit-flip coloring by construction; existence is guaranteed for
    either single constraint."""
    w = f.w
    if avoid_bit is not None and not 1 <= avoid_bit <= w:
        raise ValueError(f"avoid_bit {avoid_bit} out of 1..{w}")
    if avoid_vertex is not None and avoid_vertex == start:
        raise ValueError("avoid_vertex equals the start vertex")
    masks = [0] + [f.flip_mask(b) for b in range(1, w + 1)]
    path = [start]

    def extend(used_v: int, used_bits: int) -> bool:
        if len(path) == w:
            return True
        u = path[-1]
        for bit in range(1, w + 1):
            if bit == avoid_bit or used_bits >> bit & 1:
                continue
            v = u ^ masks[bit]
            if used_v >> v & 1 or v == avoid_vertex:
                continue
            path.append(v)
            if extend(used_v | 1 << v, used_bits | 1 << bit):
                return True
            path.pop()
        return False

    if not extend(1 << start, 0):
        raise AssertionError("no distinct-bit path found; constraints too strong")
    return tuple(path)


def path_bits(f: FoldedHypercube, path: tuple[int, ...]) -> tuple[int, ...]:
    """Bit-flip labels along a vertex path."""
    return tuple(
        f.bitflip[f.graph.edge_index(path[i], path[i + 1])] for i in range(len(path) - 1)
    )
