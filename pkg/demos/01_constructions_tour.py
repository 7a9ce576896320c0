"""Tour of the saturated graph families and their closed-form edge counts.

Each family comes with role labels and (where the construction dictates
one) an edge-coloring that is proper and rainbow-free for its pattern.
"""

from rainsat import (
    ConstructionSpec,
    Pattern,
    closed_forms,
    count_copies,
    encode_graph6,
    find_rainbow_copy,
    is_proper,
)

print("=== the clique-4 family: two shared hub vertices over K4 components ===")
for n in (6, 9, 10, 14):
    built = ConstructionSpec.parse(f"k4:n={n}").build()
    g, c = built.graph, built.coloring
    print(
        f"n={n:>2}: {g.m} edges (closed form {closed_forms(f'construction_edge_count(k4:n={n})')}), "
        f"{len(set(c))} colors, proper={is_proper(g, c)}, "
        f"rainbow-K4-free={find_rainbow_copy(g, c, Pattern.clique(4)) is None}"
    )

print()
print("=== complete multipartite family for larger cliques ===")
for r, n in ((3, 12), (4, 31)):
    built = ConstructionSpec.parse(f"kr:r={r},n={n}").build()
    sizes = [len(p) for p in built.labels["parts"]]
    print(
        f"r={r}, n={n}: parts {sizes}, {built.graph.m} edges, "
        f"K{r+1}-copies: {count_copies(built.graph, Pattern.clique(r + 1))}"
    )
print("per-vertex slope at r=4:", closed_forms("kr_upper_poly_slope(4)"))

print()
print("=== pendant families for paths ===")
for spec in ("p5:n=8", "path:k=6,n=20", "path:k=7,n=48"):
    built = ConstructionSpec.parse(spec).build()
    pat = ConstructionSpec.parse(spec).pattern()
    print(
        f"{spec}: {built.graph.m} edges, shipped coloring rainbow-{pat}-free: "
        f"{find_rainbow_copy(built.graph, built.coloring, pat) is None}"
    )

print()
print("=== odd cycle family: small clique joined to an independent set ===")
built = ConstructionSpec.parse("cycle:k=7,n=19").build()
print(
    f"cycle:k=7,n=19: {built.graph.m} edges, C7 copies: "
    f"{count_copies(built.graph, Pattern.cycle(7))}, graph6: {encode_graph6(built.graph)[:24]}..."
)
