import pytest
from hypothesis import given, strategies as st

from gaindex.errors import BadEdgeList, BadGraph6
from gaindex.families import construct_example_210
from gaindex.formats import iter_graph6_lines, parse_edge_list, parse_graph6, write_edge_list, write_graph6
from gaindex.graph import Graph, from_edge_list

import networkx as nx

C4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_k2_hand_encoding():
    g = parse_graph6("A_")
    assert (g.n, g.m) == (2, 1)
    assert write_graph6(g) == b"A_"


def test_cycle_round_trip():
    assert parse_graph6(write_graph6(C4)) == C4


def test_header_accepted():
    assert parse_graph6(write_graph6(C4, header=True)) == C4


@pytest.mark.parametrize("bad", [b"A\x20", b"", b"A", b"A__", b":Fa@x^", b"A`"])
def test_rejects(bad):
    with pytest.raises(BadGraph6):
        parse_graph6(bad)


def test_large_size_field():
    g = from_edge_list(70, [(0, 69), (3, 4)])
    data = write_graph6(g)
    assert data[0] == 126
    assert parse_graph6(data) == g


def test_agrees_with_networkx():
    g = construct_example_210()
    ref = nx.from_graph6_bytes(write_graph6(g))
    assert sorted(ref.edges()) == sorted(g.edges())
    assert nx.to_graph6_bytes(ref, header=False).strip() == write_graph6(g)


@given(st.integers(1, 12), st.data())
def test_round_trip_random(n, data):
    bits = n * (n - 1) // 2
    mask = data.draw(st.integers(0, (1 << bits) - 1)) if bits else 0
    g = Graph.from_mask(n, mask)
    assert parse_graph6(write_graph6(g)) == g
    assert parse_edge_list(write_edge_list(g)) == g


def test_stream_line_numbers():
    text = "A_\n\nC~\nbad!\n"
    it = iter_graph6_lines(text)
    assert next(it)[0] == 1
    assert next(it)[0] == 3
    with pytest.raises(BadGraph6, match="line 4"):
        next(it)


def test_edge_list_comments_and_errors():
    g = parse_edge_list("# a square\nn 4\n0 1\n1 2 # side\n2 3\n3 0\n")
    assert g == C4
    with pytest.raises(BadEdgeList, match="line 2"):
        parse_edge_list("n 3\n0 x\n")
    with pytest.raises(BadEdgeList):
        parse_edge_list("0 1\n")
    with pytest.raises(BadEdgeList):
        parse_edge_list("n 3\n0 0\n")
