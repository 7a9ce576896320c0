"""rainsat: proper rainbow saturation at desk scale."""

from .graph import (
    Graph,
    build_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join_graphs,
    path_graph,
)
from .patterns import Copy, Pattern, count_copies, enumerate_copies
from .coloring import (
    EdgeColoring,
    canonicalize_colors,
    color_classes,
    find_rainbow_copy,
    is_proper,
    is_restricted_growth,
)
from .canonical import canonical_key, isomorphism_hash
from .solver import (
    BUDGET_EXCEEDED,
    FOUND,
    NONE_EXISTS,
    Budget,
    EnumerationOutcome,
    SearchOutcome,
    check_unrestricted,
    enumerate_rainbow_free_colorings,
    find_rainbow_free_coloring,
    solve_with_fixed,
)
from .formats import (
    FormatError,
    decode_coloring,
    decode_edge_list,
    decode_graph6,
    encode_coloring,
    encode_bitflip_edges,
    encode_edge_list,
    encode_graph6,
    to_dot,
)
from .hypercube import (
    FoldedHypercube,
    Tbfc,
    UniquenessReport,
    bitflip_coloring,
    build_folded_hypercube,
    extend_tbfrc,
    find_tbfrc,
    nice_path,
    path_bits,
    verify_unique_coloring,
)
from .constructions import (
    ColoredConstruction,
    ConstructionSpec,
    all_distinct_coloring,
    audit_clique_extension,
    closed_forms,
    construct_cycle_family,
    construct_k4_family,
    construct_kr_family,
    construct_p5_family,
    construct_path_family,
    greedy_proper_coloring,
    greedy_rainbow_cycle,
    kr_part_sizes,
    random_proper_coloring,
)
from .saturation import (
    INCONCLUSIVE,
    MISSED_EDGE,
    NOT_COLORABLE,
    SATURATED,
    RsatResult,
    SaturationReport,
    Violation,
    audit_structure,
    check_saturation,
    rsat_exact,
)
from .canonical import graph_automorphisms
from .schema import REPORT_SCHEMA

__version__ = "0.1.0"
