import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from rainsat import (
    FormatError,
    build_graph,
    complete_graph,
    decode_coloring,
    decode_edge_list,
    decode_graph6,
    empty_graph,
    encode_coloring,
    encode_edge_list,
    encode_graph6,
    to_dot,
)

from oracles import to_networkx


@st.composite
def random_graphs(draw, max_n=32):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, min(20, n * (n - 1) // 2)))
    pairs = set()
    for _ in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 1))
        if u != v:
            pairs.add((min(u, v), max(u, v)))
    return build_graph(n, sorted(pairs))


class TestGraph6:
    def test_reference_values(self):
        # Frozen against the reference codec (networkx agrees below).
        assert encode_graph6(complete_graph(4)) == "C~"
        assert encode_graph6(complete_graph(3)) == "Bw"
        assert encode_graph6(empty_graph(2)) == "A?"

    def test_decode_reference_values(self):
        assert set(decode_graph6("C~").edges) == set(complete_graph(4).edges)
        assert decode_graph6("A?").n == 2
        assert decode_graph6("Bw").m == 3

    def test_truncated_rejected(self):
        with pytest.raises(FormatError):
            decode_graph6("B")

    def test_bad_padding_rejected(self):
        # K3 body with a nonzero padding bit.
        with pytest.raises(FormatError):
            decode_graph6("B" + chr(63 + 0b111001))

    def test_out_of_range_char_rejected(self):
        with pytest.raises(FormatError):
            decode_graph6("C\x1f")

    def test_header_prefix_accepted(self):
        assert decode_graph6(">>graph6<<C~").m == 6

    @given(random_graphs())
    @settings(max_examples=150)
    def test_roundtrip(self, g):
        back = decode_graph6(encode_graph6(g))
        assert back.n == g.n
        assert set(back.edges) == set(g.edges)

    @given(random_graphs())
    @settings(max_examples=150)
    def test_matches_networkx(self, g):
        ours = encode_graph6(g)
        theirs = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
        assert ours == theirs
        back = nx.from_graph6_bytes(ours.encode())
        assert set(back.edges()) == {tuple(e) for e in g.edges}

    def test_large_n_header(self):
        g = empty_graph(100)
        s = encode_graph6(g)
        assert s.startswith("~")
        assert decode_graph6(s).n == 100


class TestEdgeList:
    def test_roundtrip(self):
        g = build_graph(5, [(0, 1), (3, 4), (1, 2)])
        assert decode_edge_list(encode_edge_list(g)).edges == g.edges

    def test_missing_header(self):
        with pytest.raises(FormatError):
            decode_edge_list("0 1\n")

    def test_bad_line(self):
        with pytest.raises(FormatError):
            decode_edge_list("n=3\n0 1 2\n")


class TestColoringText:
    def test_roundtrip(self):
        g = complete_graph(3)
        text = encode_coloring(g, (0, 1, 2))
        assert decode_coloring(g, text) == (0, 1, 2)

    def test_any_edge_order(self):
        g = complete_graph(3)
        text = "n=3 m=3\n1 2 7\n0 1 5\n0 2 6\n"
        assert decode_coloring(g, text) == (5, 6, 7)

    def test_header_mismatch(self):
        with pytest.raises(FormatError):
            decode_coloring(complete_graph(3), "n=4 m=3\n")

    def test_missing_edge(self):
        g = complete_graph(3)
        with pytest.raises(FormatError):
            decode_coloring(g, "n=3 m=3\n0 1 1\n0 2 2\n")

    def test_non_edge_rejected(self):
        g = build_graph(3, [(0, 1)])
        with pytest.raises(FormatError):
            decode_coloring(g, "n=3 m=1\n1 2 0\n")


def test_dot_export():
    g = complete_graph(3)
    plain = to_dot(g)
    assert "0 -- 1" in plain and plain.startswith("graph G {")
    colored = to_dot(g, (0, 1, 2))
    assert 'label="2"' in colored
