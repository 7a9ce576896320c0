"""Text interchange formats: graph6, edge-list, DOT, and coloring files.

graph6 follows the standard sparse-graph encoding: a size header (one char
63+n for n <= 62, or '~' plus three chars of an 18-bit value for larger n),
then the upper triangle of the adjacency matrix read column by column,
packed 6 bits per character with each char offset by 63 and the final char
zero-padded.
"""

from __future__ import annotations

from .graph import Graph, build_graph


class FormatError(ValueError):
    """Malformed input text for one of the interchange formats."""


# --- graph6 -----------------------------------------------------------------

def encode_graph6(g: Graph) -> str:
    if g.n <= 62:
        out = [chr(63 + g.n)]
    elif g.n <= 258047:
        out = ["~", chr(63 + (g.n >> 12)), chr(63 + (g.n >> 6 & 63)), chr(63 + (g.n & 63))]
    else:
        raise ValueError(f"graph6 encoding not supported for n={g.n}")
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            acc = acc << 1 | (row >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"graph6 character {ch!r} out of range")
    if s[0] == "~":
        if len(s) < 4:
            raise FormatError("truncated graph6 size header")
        if s[1] == "~":
            raise FormatError("graph6 long-size (>258047 vertices) not supported")
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} chars, expected {(nbits + 5) // 6}")
    bits = 0
    for ch in body:
        bits = bits << 6 | (ord(ch) - 63)
    pad = len(body) * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise FormatError("graph6 padding bits are not zero")
    bits >>= pad
    pairs = []
    pos = nbits
    for v in range(1, n):
        for u in range(v):
            pos -= 1
            if bits >> pos & 1:
                pairs.append((u, v))
    return build_graph(n, pairs)


# --- edge-list text ---------------------------------------------------------

def encode_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def decode_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].startswith("n="):
        raise FormatError('edge-list text must start with an "n=<count>" line')
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise FormatError(f"bad vertex count line {lines[0]!r}") from None
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"bad edge line {ln!r}") from None
    return build_graph(n, pairs)


# --- DOT export -------------------------------------------------------------

# Palette for DOT rendering; colors cycle when a coloring uses more.
_DOT_COLORS = (
    "red", "blue", "forestgreen", "orange", "purple", "saddlebrown",
    "deeppink", "gray40", "olive", "cyan3", "magenta3", "gold3",
)


def to_dot(g: Graph, coloring: tuple[int, ...] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for i, (u, v) in enumerate(g.edges):
        if coloring is None:
            lines.append(f"  {u} -- {v};")
        else:
            c = coloring[i]
            dot = _DOT_COLORS[c % len(_DOT_COLORS)]
            lines.append(f'  {u} -- {v} [label="{c}", color="{dot}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- coloring text ----------------------------------------------------------

def encode_coloring(g: Graph, colors: tuple[int, ...]) -> str:
    """One "u v color" line per edge, headed by "n=<count> m=<count>"."""
    if len(colors) != g.m:
        raise ValueError(f"coloring has {len(colors)} entries for {g.m} edges")
    lines = [f"n={g.n} m={g.m}"]
    lines += [f"{u} {v} {colors[i]}" for i, (u, v) in enumerate(g.edges)]
    return "\n".join(lines) + "\n"


def decode_coloring(g: Graph, text: str) -> tuple[int, ...]:
    """Parse a coloring file against g; edges may appear in any order."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise FormatError("empty coloring text")
    head = lines[0].split()
    if len(head) != 2 or not head[0].startswith("n=") or not head[1].startswith("m="):
        raise FormatError('coloring text must start with "n=<count> m=<count>"')
    n, m = int(head[0][2:]), int(head[1][2:])
    if n != g.n or m != g.m:
        raise FormatError(f"coloring header n={n} m={m} does not match graph (n={g.n}, m={g.m})")
    colors = [-1] * g.m
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"bad coloring line {ln!r}")
        u, v, c = int(parts[0]), int(parts[1]), int(parts[2])
        if c < 0:
            raise FormatError(f"negative color on line {ln!r}")
        try:
            idx = g.edge_index(u, v)
        except KeyError:
            raise FormatError(f"({u},{v}) is not an edge of the graph") from None
        if colors[idx] >= 0:
            raise FormatError(f"edge ({u},{v}) colored twice")
        colors[idx] = c
    if any(c < 0 for c in colors):
        raise FormatError("coloring text misses some edges")
    return tuple(colors)


def encode_bitflip_edges(g: Graph, bitflip: tuple[int, ...]) -> str:
    """Bit-flip annotated edge list: "u v bit" per line."""
    lines = [f"n={g.n} m={g.m}"]
    lines += [f"{u} {v} {bitflip[i]}" for i, (u, v) in enumerate(g.edges)]
    return "\n".join(lines) + "\n"
