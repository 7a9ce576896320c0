"""Saturation verification end to end, plus the exact tabulator.

A graph is rainbow H-saturated when it has a proper rainbow-H-free coloring
but every single-edge extension admits none. The verifier decides both
conditions exhaustively and reports per-non-edge outcomes.
"""

from rainsat import (
    Pattern,
    audit_structure,
    build_graph,
    check_saturation,
    construct_k4_family,
    construct_p5_family,
    cycle_graph,
    rsat_exact,
)

print("=== the clique-4 family is saturated (checked, not assumed) ===")
for n in (6, 7, 8):
    rep = check_saturation(construct_k4_family(n).graph, Pattern.clique(4))
    print(f"n={n}: {rep.verdict} ({len(rep.per_nonedge)} non-edges, all exhausted)")

print()
print("=== a near miss: the star is not rainbow-P5-saturated ===")
star = build_graph(5, [(0, i) for i in range(1, 5)])
rep = check_saturation(star, Pattern.path(5))
print(f"K(1,4) vs P5: {rep.verdict} at edge {rep.missed_edge}")
print("adding a leaf-leaf edge creates no new P5-copy, so the old coloring extends")

print()
print("=== exact minimum edge counts for rainbow K3-saturation ===")
for n in (3, 4, 5, 6):
    res = rsat_exact(n, Pattern.clique(3))
    print(
        f"n={n}: minimum {res.value} edges (witness {res.witness.edges}), "
        f"examined {res.graphs_examined} graphs, exhaustive={res.exhaustive}"
    )

print()
print("=== structural audits: facts every K4-saturated graph must satisfy ===")
clean = audit_structure(construct_k4_family(8).graph, Pattern.clique(4))
print(f"clique-4 family instance, n=8: {len(clean)} violations")
bad = audit_structure(cycle_graph(5), Pattern.clique(4))
print(f"C5 (not saturated): {len(bad)} violations, e.g. {bad[0].check} at {bad[0].vertices}")

print()
print("=== saturation saturates: condition (2) holds for the P5 family ===")
rep = check_saturation(construct_p5_family(9).graph, Pattern.path(5))
print(f"pendant family n=9: {rep.verdict}")
