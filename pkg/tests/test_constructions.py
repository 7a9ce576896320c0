import random
from fractions import Fraction

import pytest

from rainsat import (
    ConstructionSpec,
    Pattern,
    all_distinct_coloring,
    audit_clique_extension,
    closed_forms,
    construct_cycle_family,
    construct_k4_family,
    construct_kr_family,
    construct_p5_family,
    construct_path_family,
    count_copies,
    find_rainbow_copy,
    greedy_proper_coloring,
    greedy_rainbow_cycle,
    is_proper,
    random_proper_coloring,
)
from rainsat.constructions import kr_min_n


class TestSpec:
    def test_parse_and_format(self):
        for text in ("k4:n=10", "kr:r=4,n=31", "path:k=6,n=20", "p5:n=8", "cycle:k=7,n=19"):
            assert str(ConstructionSpec.parse(text)) == text

    def test_bad_specs(self):
        for text in ("k4", "k4:x=1", "bogus:n=3", "kr:r=4"):
            with pytest.raises(ValueError):
                ConstructionSpec.parse(text)

    def test_pattern_mapping(self):
        assert ConstructionSpec.parse("kr:r=4,n=31").pattern() == Pattern.clique(5)
        assert ConstructionSpec.parse("p5:n=8").pattern() == Pattern.path(5)


class TestK4Family:
    def test_n6_is_k6(self):
        cc = construct_k4_family(6)
        assert cc.graph.m == 15
        assert len(set(cc.coloring)) == 5

    def test_n10_color_zero_shared(self):
        cc = construct_k4_family(10)
        assert cc.graph.m == 29
        zero_edges = [i for i, c in enumerate(cc.coloring) if c == 0]
        # xy plus two matching edges inside each of the two K4 components
        assert len(zero_edges) == 5

    def test_n9_remainder(self):
        cc = construct_k4_family(9)
        assert cc.graph.m == 1 + 14 + 6 + 3

    @pytest.mark.parametrize("n", range(6, 15))
    def test_coloring_valid(self, n):
        cc = construct_k4_family(n)
        assert is_proper(cc.graph, cc.coloring)
        assert find_rainbow_copy(cc.graph, cc.coloring, Pattern.clique(4)) is None

    def test_remainder_uses_at_most_four_new_colors(self):
        for n in (7, 8, 9, 11, 12, 13):
            cc = construct_k4_family(n)
            full = (n - 2) // 4
            rem_colors = {c for c in cc.coloring if c > 4 * full}
            assert len(rem_colors) <= 4

    def test_too_small(self):
        with pytest.raises(ValueError):
            construct_k4_family(5)


class TestKrFamily:
    def test_parts_3_12(self):
        cc = construct_kr_family(3, 12)
        assert [len(p) for p in cc.labels["parts"]] == [1, 4, 7]
        assert cc.graph.m == 39

    def test_parts_4_31(self):
        cc = construct_kr_family(4, 31)
        assert [len(p) for p in cc.labels["parts"]] == [1, 4, 13, 13]
        assert cc.graph.m == 303

    def test_kr_plus_one_free(self):
        assert count_copies(construct_kr_family(3, 12).graph, Pattern.clique(4)) == 0
        assert count_copies(construct_kr_family(4, 31).graph, Pattern.clique(5)) == 0

    def test_coloring_proper(self):
        cc = construct_kr_family(3, 12)
        assert is_proper(cc.graph, cc.coloring)

    @pytest.mark.parametrize("r", [3, 4, 5])
    def test_slope_matches_polynomial(self, r):
        n0 = kr_min_n(r)
        e0 = construct_kr_family(r, n0).graph.m
        e1 = construct_kr_family(r, n0 + 1).graph.m
        assert Fraction(e1 - e0) == closed_forms(f"kr_upper_poly_slope({r})")

    @pytest.mark.parametrize("r", range(3, 9))
    def test_poly_equals_part_sum(self, r):
        want = 1 + sum(i * (i - 1) * (i - 2) // 2 + 1 for i in range(3, r + 1))
        assert closed_forms(f"kr_upper_poly_slope({r})") == want

    def test_range_validation(self):
        with pytest.raises(ValueError):
            construct_kr_family(3, 8)


class TestPathFamily:
    def test_6_20(self):
        cc = construct_path_family(6, 20)
        assert cc.graph.m == 22
        assert is_proper(cc.graph, cc.coloring)
        assert find_rainbow_copy(cc.graph, cc.coloring, Pattern.path(6)) is None

    def test_extra_pendant_lands_on_zero(self):
        cc = construct_path_family(6, 21)
        assert cc.graph.m == 23
        assert len(cc.labels["pendants"][0]) == 5
        assert all(len(p) == 4 for p in cc.labels["pendants"][1:])

    def test_7_48(self):
        cc = construct_path_family(7, 48)
        assert cc.graph.m == 56
        assert is_proper(cc.graph, cc.coloring)
        assert find_rainbow_copy(cc.graph, cc.coloring, Pattern.path(7)) is None

    def test_range_validation(self):
        with pytest.raises(ValueError):
            construct_path_family(5, 100)
        with pytest.raises(ValueError):
            construct_path_family(6, 19)

    def test_core_restriction_round_trip_on_samples(self):
        # A proper coloring of the pendant construction has a rainbow P6
        # iff its core restriction has a rainbow P4 (sampled colorings).
        cc = construct_path_family(6, 20)
        g = cc.graph
        core_m = 6
        from rainsat import build_graph

        core_graph = build_graph(4, g.edges[:core_m])
        rng = random.Random(11)
        hits = 0
        for _ in range(60):
            colors = random_proper_coloring(g, rng)
            whole = find_rainbow_copy(g, colors, Pattern.path(6)) is not None
            core_part = (
                find_rainbow_copy(core_graph, colors[:core_m], Pattern.path(4)) is not None
            )
            assert whole == core_part
            hits += whole
        assert 0 < hits  # random colorings do produce rainbow paths


class TestP5Family:
    @pytest.mark.parametrize("n", range(8, 13))
    def test_counts_and_coloring(self, n):
        cc = construct_p5_family(n)
        assert cc.graph.m == n + 2
        assert is_proper(cc.graph, cc.coloring)
        assert find_rainbow_copy(cc.graph, cc.coloring, Pattern.path(5)) is None

    def test_pendants_avoid_core_colors_at_attachment(self):
        cc = construct_p5_family(10)
        attach_colors = {cc.coloring[i] for i in (0, 1, 2)}  # core edges at x
        pendant_colors = {cc.coloring[i] for i in range(6, cc.graph.m)}
        assert not attach_colors & pendant_colors

    def test_too_small(self):
        with pytest.raises(ValueError):
            construct_p5_family(7)


class TestCycleFamily:
    def test_7_19(self):
        cc = construct_cycle_family(7, 19)
        assert cc.graph.m == 51
        assert count_copies(cc.graph, Pattern.cycle(7)) == 0
        assert is_proper(cc.graph, cc.coloring)

    def test_9_25(self):
        assert construct_cycle_family(9, 25).graph.m == 90

    def test_validation(self):
        with pytest.raises(ValueError):
            construct_cycle_family(8, 30)
        with pytest.raises(ValueError):
            construct_cycle_family(7, 18)


class TestGreedyRainbowCycle:
    def test_seeded_random_colorings(self):
        built = construct_cycle_family(7, 19)
        ys = built.labels["y_labels"]
        rng = random.Random(42)
        for _ in range(50):
            gp = built.graph.with_edge(ys[0], ys[1])
            colors = random_proper_coloring(gp, rng)
            cyc = greedy_rainbow_cycle(gp, colors, 7, built.labels["x_labels"], ys)
            assert cyc is not None and len(cyc) == 7

    def test_all_distinct_coloring(self):
        built = construct_cycle_family(7, 19)
        ys = built.labels["y_labels"]
        gp = built.graph.with_edge(ys[0], ys[1])
        cyc = greedy_rainbow_cycle(gp, all_distinct_coloring(gp), 7, built.labels["x_labels"], ys)
        assert cyc is not None

    def test_requires_single_yy_edge(self):
        built = construct_cycle_family(7, 19)
        with pytest.raises(ValueError):
            greedy_rainbow_cycle(
                built.graph,
                built.coloring,
                7,
                built.labels["x_labels"],
                built.labels["y_labels"],
            )

    def test_result_is_rainbow_cycle(self):
        built = construct_cycle_family(9, 25)
        ys = built.labels["y_labels"]
        rng = random.Random(5)
        gp = built.graph.with_edge(ys[0], ys[1])
        colors = random_proper_coloring(gp, rng)
        cyc = greedy_rainbow_cycle(gp, colors, 9, built.labels["x_labels"], ys)
        edge_colors = [colors[gp.edge_index(cyc[i], cyc[(i + 1) % 9])] for i in range(9)]
        assert len(set(edge_colors)) == 9


class TestAuditCliqueExtension:
    def test_r3_with_exhaustive(self):
        assert audit_clique_extension(3, trials=25, seed=0)

    def test_r4_sampled(self):
        assert audit_clique_extension(4, trials=25, seed=0, exhaustive=False)


class TestClosedForms:
    def test_named_values(self):
        assert closed_forms("kr_upper_poly_slope(4)") == 18
        assert closed_forms("path_upper(6, 20)") == 22
        assert closed_forms("cycle_upper(7, 19)") == 51
        assert closed_forms("k4_upper_slope") == Fraction(7, 2)
        assert closed_forms("kr_lower_slope(5)") == 4
        assert closed_forms("path_lower(30)") == 29
        assert closed_forms("path_upper(5, 10)") == 12
        assert closed_forms("kr_mindeg_slope(4, 5)") == Fraction(7, 2)
        assert closed_forms("k4_lower(1000, 1/100)") == Fraction(7, 2) * 1000 - 80

    def test_construction_edge_counts(self):
        assert closed_forms("construction_edge_count(k4:n=9)") == 24
        assert closed_forms("construction_edge_count(kr:r=4,n=31)") == 303
        assert closed_forms("construction_edge_count(path:k=8,n=112)") == 112 + 3 * 8

    def test_unknown_query(self):
        with pytest.raises(ValueError):
            closed_forms("nope(3)")

    def test_greedy_coloring_proper(self):
        g = construct_cycle_family(7, 19).graph
        assert is_proper(g, greedy_proper_coloring(g))
