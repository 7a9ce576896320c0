import pytest

from rainsat import (
    Budget,
    Pattern,
    Tbfc,
    bitflip_coloring,
    build_folded_hypercube,
    canonical_key,
    complete_bipartite,
    complete_graph,
    extend_tbfrc,
    find_rainbow_copy,
    find_tbfrc,
    is_proper,
    nice_path,
    path_bits,
    verify_unique_coloring,
    canonicalize_colors,
    color_classes,
)


class TestBuild:
    def test_w3_is_k4(self):
        f = build_folded_hypercube(3)
        assert canonical_key(f.graph) == canonical_key(complete_graph(4))

    def test_w4_is_k44(self):
        f = build_folded_hypercube(4)
        assert canonical_key(f.graph) == canonical_key(complete_bipartite(4, 4))

    def test_w5_counts(self):
        f = build_folded_hypercube(5)
        assert f.graph.n == 16 and f.graph.m == 40
        assert set(f.graph.degrees()) == {5}

    @pytest.mark.parametrize("w", range(3, 9))
    def test_invariants(self, w):
        f = build_folded_hypercube(w)
        g = f.graph
        assert g.n == 1 << (w - 1)
        assert g.m == w * (1 << (w - 2))
        assert set(g.degrees()) == {w}
        assert g.diameter() == w // 2
        # every bit class is a perfect matching of 2^(w-2) edges
        for bit, edges in color_classes(g, f.bitflip).items():
            assert len(edges) == 1 << (w - 2)
            seen = set()
            for e in edges:
                u, v = g.edges[e]
                assert u not in seen and v not in seen
                seen.update((u, v))

    def test_endpoints_differ_in_labeled_bit(self):
        f = build_folded_hypercube(5)
        for e, (u, v) in enumerate(f.graph.edges):
            assert f.neighbor(u, f.bitflip[e]) == v

    def test_w_too_small(self):
        with pytest.raises(ValueError):
            build_folded_hypercube(2)


class TestBitflipColoring:
    @pytest.mark.parametrize("w", range(3, 7))
    def test_proper_and_rainbow_path_free(self, w):
        f = build_folded_hypercube(w)
        c = bitflip_coloring(f)
        assert is_proper(f.graph, c)
        assert find_rainbow_copy(f.graph, c, Pattern.path(w + 1)) is None

    def test_w3_gives_matching_coloring(self):
        f = build_folded_hypercube(3)
        classes = color_classes(f.graph, bitflip_coloring(f))
        assert sorted(len(v) for v in classes.values()) == [2, 2, 2]

    @pytest.mark.parametrize("w", [3, 4, 5])
    def test_rainbow_walks_close(self, w):
        # Any walk using all w bit flips returns to its start class.
        f = build_folded_hypercube(w)
        from itertools import permutations

        for start in range(f.graph.n):
            for order in permutations(range(1, w + 1)):
                v = start
                for bit in order:
                    v = f.neighbor(v, bit)
                assert v == start


class TestTbfrc:
    def test_w3_triangle(self):
        f = build_folded_hypercube(3)
        t = find_tbfrc(f, bitflip_coloring(f))
        assert t is not None
        assert sorted(t.bits) == [1, 2, 3]
        assert t.is_rainbow()

    def test_w5_search(self):
        f = build_folded_hypercube(5)
        t = find_tbfrc(f, bitflip_coloring(f))
        assert t is not None
        assert sorted(t.bits) == [1, 2, 3, 4, 5]
        assert sorted(t.colors) == [1, 2, 3, 4, 5]

    def test_w4_unique_coloring_has_tbfrc(self):
        from rainsat import enumerate_rainbow_free_colorings

        f = build_folded_hypercube(4)
        for coloring in enumerate_rainbow_free_colorings(f.graph, Pattern.path(5)).colorings:
            assert find_tbfrc(f, coloring) is not None

    def test_cycle_is_closed_walk(self):
        f = build_folded_hypercube(5)
        t = find_tbfrc(f, bitflip_coloring(f))
        for i in range(t.w):
            u, v = t.vertices[i], t.vertices[(i + 1) % t.w]
            assert f.graph.has_edge(u, v)


class TestExtend:
    @pytest.mark.parametrize("w", [5, 6])
    def test_roundtrip_reproduces_bitflip(self, w):
        f = build_folded_hypercube(w)
        c = bitflip_coloring(f)
        t = find_tbfrc(f, c)
        ext = extend_tbfrc(f, t)
        assert canonicalize_colors(ext) == canonicalize_colors(c)

    def test_w6_any_rainbow_tbfc_extends_clean(self):
        # Relabel the found cycle's colors arbitrarily; the extension must
        # still verify rainbow-P7-free (checked inside extend_tbfrc).
        f = build_folded_hypercube(6)
        t = find_tbfrc(f, bitflip_coloring(f))
        relabeled = Tbfc(t.vertices, t.bits, t.edge_indexes, tuple(c + 10 for c in t.colors))
        ext = extend_tbfrc(f, relabeled)
        assert find_rainbow_copy(f.graph, ext, Pattern.path(7)) is None

    def test_small_w_rejected(self):
        f = build_folded_hypercube(4)
        t = Tbfc((0,), (1,), (0,), (1,))
        with pytest.raises(ValueError):
            extend_tbfrc(f, t)

    def test_non_rainbow_rejected(self):
        f = build_folded_hypercube(5)
        t = find_tbfrc(f, bitflip_coloring(f))
        broken = Tbfc(t.vertices, t.bits, t.edge_indexes, (1,) * 5)
        with pytest.raises(ValueError):
            extend_tbfrc(f, broken)


class TestUniqueness:
    def test_w3(self):
        rep = verify_unique_coloring(3)
        assert rep.count == 1 and rep.relabel_count == 1 and rep.exhaustive

    def test_w4_orbit_count_one(self):
        rep = verify_unique_coloring(4)
        assert rep.exhaustive
        assert rep.relabel_count == 6  # six relabel classes, one orbit
        assert rep.count == 1

    def test_budget_flagged(self):
        rep = verify_unique_coloring(4, Budget(max_nodes=5))
        assert not rep.exhaustive


class TestNicePath:
    def test_avoid_bit(self):
        f = build_folded_hypercube(4)
        p = nice_path(f, 0, avoid_bit=2)
        assert len(p) == 4
        bits = path_bits(f, p)
        assert len(set(bits)) == 3 and 2 not in bits

    def test_avoid_vertex(self):
        f = build_folded_hypercube(4)
        p = nice_path(f, 0, avoid_vertex=5)
        assert len(p) == 4 and 5 not in p
        assert len(set(path_bits(f, p))) == 3

    def test_w3(self):
        f = build_folded_hypercube(3)
        p = nice_path(f, 0, avoid_bit=3)
        assert set(path_bits(f, p)) == {1, 2}

    def test_all_starts_and_bits(self):
        f = build_folded_hypercube(5)
        for start in range(f.graph.n):
            for j in range(1, 6):
                p = nice_path(f, start, avoid_bit=j)
                bits = path_bits(f, p)
                assert j not in bits and len(set(bits)) == 4

    def test_avoid_start_rejected(self):
        f = build_folded_hypercube(4)
        with pytest.raises(ValueError):
            nice_path(f, 3, avoid_vertex=3)
