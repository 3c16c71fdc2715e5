import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, to_nx
from genpos import families as fam
from genpos.errors import InvalidParameter, InvalidSpec, TooLarge
from genpos.gp import clique_number, enumerate_gp_sets, gp_number
from genpos.graph import Graph, is_connected
from genpos.resolving import strong_resolving_graph


def test_basic_families():
    g = fam.complete_multipartite(3, 2)
    assert (g.n, g.m) == (5, 6)
    p = fam.petersen()
    assert (p.n, p.m) == (10, 15)
    assert all(p.degree(u) == 3 for u in range(10))
    assert nx.girth(to_nx(p)) == 5
    assert fam.is_isomorphic(fam.cycle(4), fam.complete_bipartite(2, 2))
    with pytest.raises(InvalidParameter):
        fam.cycle(2)


def test_tree_family():
    assert len(fam.leaves(fam.tree_T(fam.TreeTSpec((5,))))) == 2
    t = fam.tree_T(fam.TreeTSpec.simple(3, 3))
    assert t.n == 6 and len(fam.leaves(t)) == 4
    t3 = fam.tree_T(fam.TreeTSpec.simple(3, 3, 3))
    assert len(fam.leaves(t3)) == 6
    with pytest.raises(InvalidSpec):
        fam.tree_T(fam.TreeTSpec((3, 3), ((1, 0),)))  # target is a leaf of the first path
    with pytest.raises(InvalidSpec):
        fam.tree_T(fam.TreeTSpec((3, 3), ((0, 1),)))  # uses a leaf of the new path
    with pytest.raises(InvalidSpec):
        fam.tree_T(fam.TreeTSpec((2,)))


@pytest.mark.parametrize("r, t, order", [(3, 2, 7), (2, 2, 5), (5, 2, None), (6, 2, None), (4, 4, 9)])
def test_realization_gadget(r, t, order):
    g = fam.realization_gadget(r, t)
    if order is not None:
        assert g.n == order
    assert gp_number(g).value == r
    assert clique_number(strong_resolving_graph(g)).value == t


def test_rooted_clique_gadget():
    h, root = fam.rooted_clique_gadget(5, 2)
    assert h.n == 6 and root == 5
    assert enumerate_gp_sets(h) == [(0, 1, 2, 3, 4)]
    h, _ = fam.rooted_clique_gadget(6, 3)
    assert gp_number(h).value == 6
    with pytest.raises(InvalidParameter):
        fam.rooted_clique_gadget(4, 3)


def test_enumeration_counts():
    assert [len(list(fam.enumerate_connected_graphs(n))) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]
    assert {g.m for g in fam.enumerate_connected_graphs(3)} == {2, 3}


@pytest.mark.parametrize("n", [4, 5, 6])
def test_enumeration_against_networkx_atlas(n):
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)]
    ours = list(fam.enumerate_connected_graphs(n))
    assert len(ours) == len(atlas)
    for h in ours:
        assert sum(nx.is_isomorphic(to_nx(h), a) for a in atlas) == 1


def test_canonical_form_examples():
    assert fam.canonical_form(fam.cycle(4)) == fam.canonical_form(fam.complete_bipartite(2, 2))
    assert fam.canonical_form(fam.path(4)) != fam.canonical_form(fam.star(3))
    with pytest.raises(TooLarge):
        fam.canonical_form(fam.path(17))


@given(graphs(min_n=1, max_n=8, connected=False), st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_canonical_form_is_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    assert fam.canonical_form(g) == fam.canonical_form(h)


@given(graphs(min_n=1, max_n=7, connected=False), graphs(min_n=1, max_n=7, connected=False))
@settings(max_examples=60, deadline=None)
def test_canonical_form_separates(g, h):
    same = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert (fam.canonical_form(g) == fam.canonical_form(h)) == same


def test_random_generators():
    t = fam.random_tree(15, 7)
    assert t.m == 14 and is_connected(t) and nx.is_tree(to_nx(t))
    assert fam.random_tree(15, 7) == t
    for s in range(5):
        assert is_connected(fam.random_connected_graph(8, 0.4, s))


def test_from_spec():
    assert fam.from_spec("cycle:5") == fam.cycle(5)
    assert fam.from_spec("path", n=4) == fam.path(4)
    assert fam.from_spec("kbip:2,3") == fam.complete_bipartite(2, 3)
    assert fam.from_spec("petersen") == fam.petersen()
    with pytest.raises(InvalidParameter):
        fam.from_spec("nosuch:3")
    with pytest.raises(InvalidParameter):
        fam.from_spec("cycle:x")
