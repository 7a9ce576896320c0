"""The exhaustive coloring engine: decide, enumerate, and test recolorings.

Every verdict below is exact: "none-exists" is only reported after the
whole restricted-growth search space is exhausted.
"""

from rainsat import (
    Budget,
    Pattern,
    check_unrestricted,
    complete_bipartite,
    complete_graph,
    enumerate_rainbow_free_colorings,
    find_rainbow_free_coloring,
)

print("=== any proper coloring of a triangle makes it rainbow ===")
out = find_rainbow_free_coloring(complete_graph(3), Pattern.clique(3))
print(f"K3 vs K3: {out.verdict} after {out.nodes} nodes")

print()
print("=== K4 avoids a rainbow P4 only via the matching coloring ===")
out = find_rainbow_free_coloring(complete_graph(4), Pattern.path(4))
print(f"K4 vs P4: {out.verdict}, witness {out.coloring}")
res = enumerate_rainbow_free_colorings(complete_graph(4), Pattern.path(4))
print(f"colorings up to relabeling: {res.count} (exhaustive={res.exhaustive})")

print()
print("=== K_{4,4} has six relabel-classes avoiding a rainbow P5 ===")
res = enumerate_rainbow_free_colorings(complete_bipartite(4, 4), Pattern.path(5))
print(f"count {res.count} in {res.nodes} nodes; they collapse to one class")
print("under the host's automorphisms (see demo 03)")

print()
print("=== recoloring freedom: unrestricted edge sets ===")
matching = (1, 2, 3, 3, 2, 1)
g = complete_graph(4)
one = check_unrestricted(g, matching, [0], Pattern.clique(4))
every = check_unrestricted(g, matching, range(6), Pattern.clique(4))
print(f"recoloring one matching edge can never force a rainbow K4: {one}")
print(f"recoloring all six edges is unrestricted: {every} (a rainbow recoloring exists)")

print()
print("=== budgets make exhaustion auditable ===")
out = find_rainbow_free_coloring(complete_bipartite(4, 4), Pattern.path(5), Budget(max_nodes=5))
print(f"with a 5-node budget: {out.verdict} (never silently wrong)")
