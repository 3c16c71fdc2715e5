import pytest

from genpos.errors import InvalidParameter
from genpos.explore import Catalog, ExploreBudget, explore_conjecture, load_catalog
from genpos.io import emit_graph6
from genpos import families as fam
from genpos.graph import Graph


def test_problem_2_small_sweep():
    cat = load_catalog("connected:4")
    assert len(cat.graphs) == 10
    rep = explore_conjecture("problem-2", cat, cat)
    assert rep.complete and rep.examined == 100
    assert rep.violations == []
    assert sum(rep.counts.values()) == 100


def test_problem_1_complete_graphs():
    cat = load_catalog("complete:3..5")
    rep = explore_conjecture("problem-1", cat, cat)
    assert rep.examined == 9 and rep.violations == []
    assert all(r["diam"] == 2 for r in rep.records)
    # K3 x K3 is the one strict case: gp = 4 while omega of its SR graph is 3
    strict = [r for r in rep.records if r["gp"] != r["omega_sr"]]
    assert [(r["G"], r["H"], r["gp"], r["omega_sr"]) for r in strict] == [("complete:3", "complete:3", 4, 3)]


def test_resume_cursor_reproduces_full_sweep():
    cat = load_catalog("connected:3")
    full = explore_conjecture("problem-2", cat, cat)
    first = explore_conjecture("problem-2", cat, cat, ExploreBudget(max_pairs=4))
    assert not first.complete and first.cursor == 4
    rest = explore_conjecture("problem-2", cat, cat, cursor=first.cursor)
    assert first.records + rest.records == full.records


def test_empty_catalog():
    empty = Catalog("empty", [])
    rep = explore_conjecture("problem-2", empty, empty)
    assert rep.complete and rep.examined == 0


def test_graph6_catalog_rejects_disconnected(tmp_path):
    f = tmp_path / "cat.g6"
    f.write_text("\n".join([emit_graph6(fam.path(3)), emit_graph6(fam.empty(2)), emit_graph6(fam.cycle(4))]) + "\n")
    cat = load_catalog(str(f))
    assert len(cat.graphs) == 2 and cat.rejected == 1


def test_bad_inputs():
    with pytest.raises(InvalidParameter):
        load_catalog("nonsense")
    with pytest.raises(InvalidParameter):
        explore_conjecture("problem-3", Catalog("e", []), Catalog("e", []))


def test_problem_1_finds_equality_at_diameter_three():
    k2 = load_catalog("complete:2..2")
    k4e = Catalog("k4-e", [("K4-e", Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]))])
    rep = explore_conjecture("problem-1", k2, k4e)
    assert rep.violations == [{"G": "complete:2", "H": "K4-e", "gp": 4, "omega_sr": 4, "diam": 3}]


def test_strong_torus_beats_product_of_factors():
    # C7 x C7 holds a general position 10-set while gp(C7)^2 = 9
    c7 = Catalog("c7", [("cycle:7", fam.cycle(7))])
    rep = explore_conjecture("problem-2", c7, c7)
    assert rep.counts == {"strict": 1}
    assert rep.strict_examples == [["cycle:7", "cycle:7", 10, 9]]
