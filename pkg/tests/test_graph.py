import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from genpos import families as fam
from genpos.errors import DisconnectedGraph, InvalidVertex, UnreachablePair
from genpos.graph import (
    UNREACHABLE,
    Graph,
    are_true_twins,
    bfs_all_pairs,
    complement,
    diameter,
    disjoint_union,
    has_true_twins,
    induced_subgraph,
    interval,
    is_connected,
    is_isometric_subgraph,
)
from genpos.products import direct_product, strong_product


def test_path_distance():
    assert bfs_all_pairs(fam.path(3))[0][2] == 2


def test_complete_distances():
    d = bfs_all_pairs(fam.complete(4))
    assert all(d[u][v] == 1 for u in range(4) for v in range(4) if u != v)


def test_unreachable_sentinel():
    d = bfs_all_pairs(fam.empty(2))
    assert d[0][1] is UNREACHABLE
    assert not d.reachable(0, 1)


@given(graphs(max_n=9, connected=False))
@settings(max_examples=60, deadline=None)
def test_bfs_matches_networkx(g):
    ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    d = bfs_all_pairs(g)
    for u in range(g.n):
        for v in range(g.n):
            assert d[u][v] == ref[u].get(v, UNREACHABLE)


def test_connectivity():
    assert is_connected(fam.cycle(5))
    assert not is_connected(disjoint_union(fam.complete(3), fam.complete(3)))
    assert is_connected(fam.path(1))


def test_diameter_examples():
    assert diameter(fam.petersen()) == 2
    assert diameter(direct_product(fam.complete_bipartite(2, 2), fam.complete(3))[0]) == 3
    assert diameter(fam.path(5)) == 4
    with pytest.raises(DisconnectedGraph):
        diameter(fam.empty(2))


def test_intervals():
    assert interval(fam.path(4), 0, 3) == (0, 1, 2, 3)
    assert interval(fam.cycle(4), 0, 2) == (0, 1, 2, 3)
    assert interval(fam.cycle(5), 0, 2) == (0, 1, 2)
    with pytest.raises(UnreachablePair):
        interval(fam.empty(2), 0, 1)


def test_complement():
    assert complement(fam.complete(4)) == fam.empty(4)
    assert complement(fam.cycle(4)) == Graph.from_edges(4, [(0, 2), (1, 3)])


@given(graphs(max_n=8, connected=False))
@settings(max_examples=40, deadline=None)
def test_complement_involution(g):
    assert complement(complement(g)) == g


def test_induced_subgraph():
    assert induced_subgraph(fam.cycle(5), [0, 1, 2]) == fam.path(3)
    g = fam.petersen()
    assert induced_subgraph(g, range(g.n)) == g
    from genpos.gp import independence_number

    indep = independence_number(g).witness
    assert len(indep) == 4 and induced_subgraph(g, indep).m == 0


def test_isometric_subgraphs():
    # a layer of the odd cylinder and short arcs of the odd cycle are isometric
    g, pmap = strong_product(fam.path(3), fam.cycle(7))
    assert is_isometric_subgraph(g, [pmap[a, 0] for a in range(3)])
    assert is_isometric_subgraph(fam.cycle(7), [0, 1, 2, 3])
    assert not is_isometric_subgraph(fam.cycle(7), [0, 1, 2, 3, 4])
    # Petersen: removing the common neighbour of 0 and 2 leaves them at distance 3 in the induced graph
    assert not is_isometric_subgraph(fam.petersen(), [0, 2, 3, 4])


def test_true_twins():
    g = fam.complete(3)
    assert are_true_twins(g, 0, 1)
    assert not are_true_twins(fam.complete_bipartite(2, 3), 0, 1)
    assert not has_true_twins(fam.petersen())
    # expanded vertices of a lexicographic blow-up are true twins
    from genpos.products import generalized_lexicographic

    h, pmap = generalized_lexicographic(fam.path(3), [fam.complete(2), fam.complete(1), fam.complete(3)])
    assert are_true_twins(h, pmap[0, 0], pmap[0, 1])


def test_graph_validation():
    with pytest.raises(InvalidVertex):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(InvalidVertex):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(InvalidVertex):
        Graph(2, (2, 0))


def test_labels_do_not_affect_equality():
    g = fam.path(3)
    assert g.relabel(("a", "b", "c")) == g
    assert hash(g.relabel(("a", "b", "c"))) == hash(g)


def test_disjoint_union_sizes():
    u = disjoint_union(fam.path(3), fam.cycle(4))
    assert (u.n, u.m) == (7, 6)
    assert sum(1 for _ in itertools.combinations(range(u.n), 2)) == 21
