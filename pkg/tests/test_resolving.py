import itertools

import pytest
from hypothesis import given, settings

from conftest import graphs
from genpos import families as fam
from genpos.errors import InvalidVertex
from genpos.graph import Graph, bfs_all_pairs, complement, diameter, has_true_twins
from genpos.products import direct_product
from genpos.resolving import is_maximally_distant, is_mmd, simplicial_vertices, strong_resolving_graph


def test_maximally_distant_examples():
    p3 = fam.path(3)
    assert is_maximally_distant(p3, 0, 2)
    assert not is_maximally_distant(p3, 1, 2)
    k = fam.complete(5)
    assert all(is_maximally_distant(k, u, v) for u, v in itertools.permutations(range(5), 2))
    assert not is_maximally_distant(fam.cycle(4), 0, 1)


def test_mmd_examples():
    assert is_mmd(fam.path(6), 0, 5)
    assert is_mmd(fam.cycle(4), 0, 2)
    assert not is_mmd(fam.path(3), 0, 1)
    with pytest.raises(InvalidVertex):
        is_mmd(fam.path(3), 1, 1)


def test_sr_of_path():
    for n in range(2, 8):
        assert strong_resolving_graph(fam.path(n)) == Graph.from_edges(n, [(0, n - 1)])


def test_sr_of_direct_products_of_complete_graphs():
    g, _ = direct_product(fam.complete(3), fam.complete(3))
    assert fam.is_isomorphic(strong_resolving_graph(g), fam.cartesian_product(fam.complete(3), fam.complete(3)))
    g, _ = direct_product(fam.complete(4), fam.complete(2))
    sr = strong_resolving_graph(g)
    assert fam.is_isomorphic(sr, fam.cartesian_product(fam.empty(4), fam.complete(2)))
    assert sr.m == 4 and all(sr.degree(u) == 1 for u in range(8))


def test_simplicial():
    t = fam.random_tree(12, 3)
    assert simplicial_vertices(t) == fam.leaves(t)
    assert simplicial_vertices(fam.complete(4)) == (0, 1, 2, 3)
    assert simplicial_vertices(fam.cycle(5)) == ()


@given(graphs(min_n=2, max_n=8))
@settings(max_examples=60, deadline=None)
def test_sr_matches_definition(g):
    d = bfs_all_pairs(g)
    sr = strong_resolving_graph(g)
    for u, v in itertools.combinations(range(g.n), 2):
        by_def = all(d[v][w] <= d[u][v] for w in g.neighbors(u)) and all(d[u][w] <= d[u][v] for w in g.neighbors(v))
        assert sr.has_edge(u, v) == by_def == is_mmd(g, u, v, d)


@given(graphs(min_n=3, max_n=8))
@settings(max_examples=60, deadline=None)
def test_sr_is_complement_for_twin_free_diameter_two(g):
    if diameter(g) == 2 and not has_true_twins(g):
        assert strong_resolving_graph(g) == complement(g)


@given(graphs(min_n=2, max_n=8))
@settings(max_examples=40, deadline=None)
def test_diametral_pairs_are_mmd(g):
    d = bfs_all_pairs(g)
    diam = diameter(g, d)
    sr = strong_resolving_graph(g, d)
    for u, v in itertools.combinations(range(g.n), 2):
        if d[u][v] == diam:
            assert sr.has_edge(u, v)
