import itertools
import math
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from antiramsey.colouring import complete_to_proper, find_colouring, is_proper
from antiramsey.constructions import (
    class2_regular,
    forest_host,
    gadget,
    gadget_layout,
    lower_bound_partial_colouring,
    named_graph,
    nonmono_gadget,
    resolve_graph,
    z3_coloured_bipartite,
)
from antiramsey.graph import girth, structural_report

from conftest import to_nx


def test_gadget_examples():
    assert nx.is_isomorphic(to_nx(gadget(4, 2)), to_nx(named_graph("k24")))
    assert nx.is_isomorphic(to_nx(gadget(3, 1)), to_nx(named_graph("c3")))
    g = gadget(5, 3)
    assert (g.n, g.m, g.max_degree()) == (9, 13, 6)


@given(st.integers(3, 9), st.integers(1, 5))
def test_gadget_closed_forms(k, d):
    g = gadget(k, d)
    if k % 2 == 0:
        assert (g.n, g.m) == ((k // 2) * (d + 1), k * d)
    else:
        assert (g.n, g.m) == ((k + 1) // 2 + (k - 1) // 2 * d, (k - 1) * d + 1)
    # with k = 3 there is no interior hub, so both hubs have degree d + 1
    assert g.max_degree() == (2 * d if k >= 4 else d + 1)
    lay = gadget_layout(k, d)
    assert g.label(lay.hub(1)) == "u1"
    assert g.has_edge(lay.hub(1), lay.par(1, d))


def test_gadget_rejects_short_cycles():
    with pytest.raises(ValueError):
        gadget(2, 3)


def test_gadget_cycle_count():
    # for k >= 5 every copy of C_k uses one parallel vertex per segment
    assert len(list(nx.simple_cycles(to_nx(gadget(4, 3)), length_bound=4))) == math.comb(6, 2)
    for k, d in [(5, 2), (6, 3), (7, 2), (8, 2)]:
        g = gadget(k, d)
        cycles = [c for c in nx.simple_cycles(to_nx(g), length_bound=k) if len(c) == k]
        segs = (k // 2) if k % 2 == 0 else (k - 1) // 2
        assert len(cycles) == d ** segs


def test_class2_regular_small_cases():
    assert nx.is_isomorphic(to_nx(class2_regular(2)), to_nx(named_graph("c5")))
    g = class2_regular(3)
    rep = structural_report(g)
    assert g.n == 22 and rep.is_regular_of == 3 and rep.connected
    assert girth(g) == 5 and rep.cut_vertices
    assert find_colouring(g, 3) is None
    with pytest.raises(ValueError):
        class2_regular(4)


def test_nonmono_gadget_counts():
    g = nonmono_gadget()
    assert (g.n, g.m, g.max_degree()) == (9, 14, 4)


def test_z3_construction():
    g, c = z3_coloured_bipartite(1)
    assert is_proper(g, c) and c.colour_count == 3
    for col in range(1, 4):
        cls = [g.edges[e] for e in range(g.m) if c.colours[e] == col]
        assert len(cls) == 3 and len({v for e in cls for v in e}) == 6
    # no K_{2,2} is rainbow, either orientation
    for a, b in itertools.combinations(range(3), 2):
        for x, y in itertools.combinations(range(3, 6), 2):
            assert len({c[(a, x)], c[(a, y)], c[(b, x)], c[(b, y)]}) < 4
    g2, c2 = z3_coloured_bipartite(2)
    assert (g2.n, g2.m) == (18, 81) and is_proper(g2, c2) and c2.colour_count == 9
    with pytest.raises(ValueError):
        z3_coloured_bipartite(0)


def test_z3_r2_sampled_k24():
    g, c = z3_coloured_bipartite(2)
    rng = random.Random(3)
    for _ in range(2000):
        two = rng.sample(range(9), 2)
        four = [9 + x for x in rng.sample(range(9), 4)]
        assert len({c[(a, b)] for a in two for b in four}) < 8


def test_lower_bound_partial_colouring():
    g, c = lower_bound_partial_colouring(2)
    assert g == gadget(8, 3)
    lay = gadget_layout(8, 3)
    coloured = [e for e in range(g.m) if c.colours[e] is not None]
    assert {c.colours[e] for e in coloured} == {1, 2, 3}
    assert len(coloured) == 12
    assert [c[(lay.hub(2), lay.par(2, j))] for j in (1, 2, 3)] == [1, 2, 3]
    assert [c[(lay.par(2, j), lay.next_hub(2))] for j in (1, 2, 3)] == [2, 3, 1]
    full = complete_to_proper(g, c)
    assert full is not None and is_proper(g, full)
    with pytest.raises(ValueError):
        lower_bound_partial_colouring(1)


def test_named_graphs():
    g = named_graph("k4_subdivided")
    assert (g.n, g.m) == (5, 7)
    assert (named_graph("bull").n, named_graph("bull").m) == (5, 5)
    assert named_graph("c_5") == named_graph("c5")
    assert named_graph("k_3_3").m == 9 and named_graph("k33").m == 9
    assert named_graph("3xc5").n == 15
    with pytest.raises(ValueError):
        named_graph("dodecahedron")


def test_forest_host_examples():
    assert forest_host(named_graph("p4")) == named_graph("c5")
    trace = []
    h = forest_host(named_graph("p3+k2"), trace)
    assert h == named_graph("4xc5")
    assert trace[0].copies == math.comb(3, 1) + 1 and (trace[0].tree_edges, trace[0].rest_edges) == (1, 2)
    with pytest.raises(ValueError):
        forest_host(named_graph("star_3"))
    with pytest.raises(ValueError):
        forest_host(named_graph("2k2"))


@pytest.mark.parametrize("name", ["p4", "p5", "chair", "p3+k2", "3k2", "p4+k2", "p3+p3", "2k2+k2", "p3+2k2"])
def test_forest_host_degree_bound(name):
    f = named_graph(name)
    host = forest_host(f)
    assert host.max_degree() <= f.m - 1


def test_resolve_graph(tmp_graph_file):
    assert resolve_graph("gadget:5,3") == gadget(5, 3)
    assert resolve_graph("class2:2") == named_graph("c5")
    assert resolve_graph("host:p4") == named_graph("c5")
    path = tmp_graph_file(named_graph("bull"))
    assert resolve_graph(path) == named_graph("bull")
