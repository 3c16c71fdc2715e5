import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import from_nx, graphs, to_nx
from genpos import families as fam
from genpos.errors import BadToken, MalformedHeader, SelfLoop, TrailingBits, VertexOutOfRange
from genpos.io import emit_edgelist, emit_graph6, parse_edgelist, parse_graph, parse_graph6


def test_known_string():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert emit_graph6(g) == "D?{"
    assert parse_graph6(">>graph6<<D?{") == g


def test_roundtrip_enumerated_graphs():
    for g in fam.connected_graphs_up_to(6):
        assert parse_graph6(emit_graph6(g)) == g


@given(graphs(min_n=0, max_n=40, connected=False))
@settings(max_examples=60, deadline=None)
def test_graph6_matches_networkx(g):
    ours = emit_graph6(g)
    assert ours == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert from_nx(nx.from_graph6_bytes(ours.encode())) == g
    assert parse_graph6(ours) == g


def test_long_form_size_field():
    g = fam.path(70)
    text = emit_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


def test_graph6_errors():
    with pytest.raises(MalformedHeader):
        parse_graph6("")
    with pytest.raises(TrailingBits):
        parse_graph6("D?{?")
    with pytest.raises(TrailingBits):
        parse_graph6("D?|")  # padding bit set
    with pytest.raises(MalformedHeader):
        parse_graph6("D\x01")


def test_edgelist():
    assert parse_edgelist("n 3\n0 1\n1 2") == fam.path(3)
    assert parse_edgelist("n 3\n0 1\n1 0\n1 2\n") == fam.path(3)
    g = fam.petersen()
    assert parse_edgelist(emit_edgelist(g)) == g
    with pytest.raises(SelfLoop):
        parse_edgelist("n 3\n1 1")
    with pytest.raises(VertexOutOfRange):
        parse_edgelist("n 3\n0 3")
    with pytest.raises(BadToken):
        parse_edgelist("n 3\n0 x")
    with pytest.raises(BadToken):
        parse_edgelist("0 1")


def test_dispatch():
    assert parse_graph("D?{\n", "graph6").n == 5
    with pytest.raises(BadToken):
        parse_graph("x", "sparse6")
