import math

import networkx as nx
import pytest
from hypothesis import given

from antiramsey.constructions import class2_regular, named_graph
from antiramsey.corpus import hosts
from antiramsey.graph import (
    FormatError,
    Graph,
    automorphisms,
    degeneracy,
    enumerate_copies,
    girth,
    ordering_for,
    structural_report,
)
from antiramsey.oracles import brute_degeneracy, brute_girth, injective_map_count

from conftest import graphs, to_nx


def test_graph_rejects_loops_and_parallel_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


@pytest.mark.parametrize("name", ["p2", "p5", "star_4", "chair"])
def test_trees_are_one_degenerate(name):
    assert degeneracy(named_graph(name))[0] == 1


@pytest.mark.parametrize("name,d", [("c6", 2), ("k5", 4), ("petersen", 3), ("k33", 3)])
def test_degeneracy_examples(name, d):
    got, order = degeneracy(named_graph(name))
    assert got == d and order.width == d


@given(graphs(max_n=7))
def test_degeneracy_matches_brute_force(g):
    d, order = degeneracy(g)
    assert sorted(order.order) == list(range(g.n))
    assert order.width == d
    assert d <= (g.max_degree() if g.n else 0)
    assert d == brute_degeneracy(g)
    assert ordering_for(g, order.order) == order


def test_girth_examples():
    assert girth(named_graph("c5")) == 5
    assert girth(named_graph("p6")) == math.inf
    assert girth(named_graph("petersen")) == 5


@pytest.mark.parametrize("name,g", [(k, v) for k, v in hosts().items() if v.n <= 12])
def test_girth_matches_cycle_enumeration(name, g):
    assert girth(g) == brute_girth(g)
    assert girth(g) == nx.girth(to_nx(g))


def test_structural_report_examples():
    r = structural_report(named_graph("c5"))
    assert r.connected and not r.bridges and not r.cut_vertices and r.is_regular_of == 2
    r = structural_report(named_graph("p4"))
    assert len(r.bridges) == 3 and len(r.cut_vertices) == 2 and r.is_regular_of is None
    assert structural_report(class2_regular(3)).cut_vertices


@given(graphs(max_n=9))
def test_structural_report_matches_networkx(g):
    r = structural_report(g)
    ng = to_nx(g)
    assert sorted(r.bridges) == sorted(tuple(sorted(e)) for e in nx.bridges(ng))
    assert sorted(r.cut_vertices) == sorted(nx.articulation_points(ng))
    assert r.connected == (g.n > 0 and nx.is_connected(ng))


@pytest.mark.parametrize("host,pat,count", [("k4", "c4", 3), ("c5", "c4", 0), ("k24", "c4", 6)])
def test_copy_counts(host, pat, count):
    assert len(list(enumerate_copies(named_graph(host), named_graph(pat)))) == count


@pytest.mark.parametrize("name,g", [(k, v) for k, v in hosts().items() if v.n <= 10])
@pytest.mark.parametrize("pat", ["p3", "k3", "c4", "2k2", "chair", "p4"])
def test_copy_count_equals_maps_over_automorphisms(name, g, pat):
    h = named_graph(pat)
    if h.n > g.n:
        return
    copies = list(enumerate_copies(g, h))
    assert len(set(copies)) == len(copies)
    assert len(copies) == injective_map_count(g, h) // len(automorphisms(h))


def test_automorphism_group_sizes():
    assert len(automorphisms(named_graph("petersen"))) == 120
    assert len(automorphisms(named_graph("c4"))) == 8
    assert automorphisms(named_graph("bull"))[0] == tuple(range(5))


def test_text_round_trip_and_errors():
    g = named_graph("petersen")
    assert Graph.from_text(g.to_text()) == g
    with pytest.raises(FormatError) as exc:
        Graph.from_text("3 2\n0 1\n1 7\n")
    assert exc.value.line == 3
    with pytest.raises(FormatError) as exc:
        Graph.from_text("3 2\n0 1\n")
    assert exc.value.line == 1
    assert "graph" in g.to_dot() and "--" in g.to_dot()
