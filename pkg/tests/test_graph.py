import pytest
from hypothesis import given, strategies as st

from rainsat import (
    build_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join_graphs,
    path_graph,
)


def random_graphs(max_n=8):
    @st.composite
    def strat(draw):
        n = draw(st.integers(1, max_n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        if not pairs:
            return build_graph(n, ())
        chosen = draw(st.sets(st.sampled_from(pairs)))
        return build_graph(n, sorted(chosen))

    return strat()


class TestBuildGraph:
    def test_k3(self):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g.n == 3 and g.m == 3

    def test_empty(self):
        g = build_graph(4, [])
        assert g.m == 0

    def test_k4_regular(self):
        g = complete_graph(4)
        assert g.m == 6
        assert g.degrees() == [3, 3, 3, 3]

    def test_dedup_keeps_first_index(self):
        g = build_graph(3, [(0, 1), (1, 0), (2, 1)])
        assert g.edges == ((0, 1), (1, 2))
        assert g.edge_index(1, 0) == 0

    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            build_graph(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            build_graph(3, [(0, 3)])

    def test_with_edge_appends(self):
        g = path_graph(3)
        g2 = g.with_edge(0, 2)
        assert g2.edges[-1] == (0, 2) and g2.m == g.m + 1
        with pytest.raises(ValueError):
            g2.with_edge(0, 2)

    def test_non_edges(self):
        assert path_graph(3).non_edges() == [(0, 2)]
        assert complete_graph(4).non_edges() == []


class TestJoin:
    def test_k2_join_e4(self):
        j = join_graphs(complete_graph(2), empty_graph(4))
        assert j.n == 6 and j.m == 1 + 0 + 8

    def test_k3_join_e3(self):
        j = join_graphs(complete_graph(3), empty_graph(3))
        assert j.n == 6 and j.m == 12

    def test_k3_join_e16(self):
        j = join_graphs(complete_graph(3), empty_graph(16))
        assert j.n == 19 and j.m == 3 + 48

    @given(random_graphs(5), random_graphs(5))
    def test_join_count_formula(self, g, h):
        j = join_graphs(g, h)
        assert j.n == g.n + h.n
        assert j.m == g.m + h.m + g.n * h.n

    def test_disjoint_union(self):
        u = disjoint_union(complete_graph(3), path_graph(3))
        assert u.n == 6 and u.m == 5 and not u.is_connected()


class TestInvariants:
    @given(random_graphs())
    def test_handshake(self, g):
        assert sum(g.degrees()) == 2 * g.m

    @given(random_graphs())
    def test_adjacency_symmetric(self, g):
        for u in range(g.n):
            for v in range(g.n):
                assert g.has_edge(u, v) == g.has_edge(v, u)
        for u, v in g.edges:
            assert g.has_edge(u, v)

    def test_distance_and_diameter(self):
        c5 = cycle_graph(5)
        assert c5.distance(0, 2) == 2
        assert c5.diameter() == 2
        assert complete_bipartite(4, 4).diameter() == 2
        assert path_graph(5).diameter() == 4

    def test_connectivity(self):
        assert cycle_graph(4).is_connected()
        assert not build_graph(4, [(0, 1), (2, 3)]).is_connected()
