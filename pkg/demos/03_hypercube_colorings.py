"""Folded hypercubes: bit-flip colorings, total bit-flip cycles, uniqueness.

The folded hypercube on parameter w is w-regular on 2^(w-1) vertices and
admits, up to relabeling and automorphism, exactly one proper edge-coloring
with no rainbow path on w+1 vertices: the one coloring each edge by the bit
its endpoints flip.
"""

from rainsat import (
    Pattern,
    bitflip_coloring,
    build_folded_hypercube,
    canonicalize_colors,
    extend_tbfrc,
    find_rainbow_copy,
    find_tbfrc,
    is_proper,
    nice_path,
    path_bits,
    verify_unique_coloring,
)

print("=== the family at a glance ===")
for w in range(3, 8):
    f = build_folded_hypercube(w)
    g = f.graph
    print(f"w={w}: {g.n} vertices, {g.m} edges, {w}-regular, diameter {g.diameter()}")

print()
print("=== the bit-flip coloring avoids rainbow paths ===")
for w in (3, 4, 5, 6):
    f = build_folded_hypercube(w)
    c = bitflip_coloring(f)
    free = find_rainbow_copy(f.graph, c, Pattern.path(w + 1)) is None
    print(f"w={w}: proper={is_proper(f.graph, c)}, rainbow-P{w+1}-free={free}")

print()
print("=== total bit-flip rainbow cycles pin the coloring down ===")
for w in (5, 6):
    f = build_folded_hypercube(w)
    c = bitflip_coloring(f)
    t = find_tbfrc(f, c)
    ext = extend_tbfrc(f, t)
    same = canonicalize_colors(ext) == canonicalize_colors(c)
    print(f"w={w}: cycle {t.vertices} uses bits {t.bits}; extension == bit-flip coloring: {same}")

print()
print("=== uniqueness counts (relabeling + automorphism orbits) ===")
for w in (3, 4, 5):
    rep = verify_unique_coloring(w)
    print(
        f"w={w}: {rep.relabel_count} relabel-classes, {rep.count} orbit(s), "
        f"exhaustive={rep.exhaustive}, {rep.nodes} search nodes"
    )

print()
print("=== distinct-bit paths from anywhere, dodging a bit or a vertex ===")
f = build_folded_hypercube(4)
p = nice_path(f, 0, avoid_bit=2)
print(f"from 0 avoiding bit 2: vertices {p}, bits {path_bits(f, p)}")
p = nice_path(f, 0, avoid_vertex=5)
print(f"from 0 avoiding vertex 5: vertices {p}, bits {path_bits(f, p)}")
