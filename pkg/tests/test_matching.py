import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from antiramsey.colouring import EdgeColouring, enumerate_proper_colourings, is_proper
from antiramsey.constructions import named_graph
from antiramsey.errors import PreconditionError
from antiramsey.graph import Graph, enumerate_copies, norm_edge, structural_report
from antiramsey.matching import (
    TwoFactorDecomposition,
    avoid_rainbow_c4_cubic,
    extend_through_degree2,
    free_edges,
    has_rainbow_c4,
    odd_cycle_free_edge,
    perfect_matching,
    random_bridgeless_cubic,
    two_factor,
)
from antiramsey.oracles import brute_has_perfect_matching
from antiramsey.patterns import pattern

from conftest import graphs, to_nx

CUBIC = ["k4", "k33", "prism", "petersen"]


def test_perfect_matching_examples():
    assert perfect_matching(named_graph("k4")) is not None
    assert perfect_matching(named_graph("k3")) is None
    m = perfect_matching(named_graph("petersen"))
    assert len(m) == 5 and len({v for e in m for v in e}) == 10


@given(graphs(max_n=8))
def test_perfect_matching_matches_oracles(g):
    m = perfect_matching(g)
    assert (m is not None) == brute_has_perfect_matching(g)
    nxm = nx.max_weight_matching(to_nx(g), maxcardinality=True)
    assert (m is not None) == (2 * len(nxm) == g.n)
    if m is not None:
        assert all(g.has_edge(*e) for e in m)


def _check_decomp(d: TwoFactorDecomposition):
    g = d.graph
    assert sorted(v for e in d.matching for v in e) == list(range(g.n))
    assert sorted(v for c in d.cycles for v in c) == list(range(g.n))
    for i, cyc in enumerate(d.cycles):
        assert len(cyc) >= 3
        for e in d.cycle_edges(i):
            assert g.has_edge(*e) and e not in d.matching


def _free_by_c4(d: TwoFactorDecomposition, e):
    g = d.graph
    eid = g.edge_id(*e)
    for cp in enumerate_copies(g, pattern("c4")):
        if eid in cp and sum(g.edges[x] in d.matching for x in cp) < 2:
            return False
    return True


def test_prism_free_edges():
    g = named_graph("prism")
    rungs = [e for e in g.edges if not any(set(e) <= set(t) for t in ((0, 1, 2), (3, 4, 5)))]
    d = two_factor(g, rungs)
    for i in range(2):
        assert sorted(free_edges(d, i)) == sorted(d.cycle_edges(i))
        assert odd_cycle_free_edge(d, i) in d.cycle_edges(i)


def test_c5_chord_blocks_free_edge():
    # v0..v4 on a cycle with v0v3 in M: edge v1v2 has v0v3 among its brackets
    cyc = (0, 1, 2, 3, 4)
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 3)])
    d = TwoFactorDecomposition(g, frozenset({(0, 3)}), (cyc,))
    assert (1, 2) not in free_edges(d, 0)
    with pytest.raises(ValueError):
        free_edges(TwoFactorDecomposition(g, frozenset(), ((0, 1, 2, 3),)), 0)


def test_petersen_outer_cycle_free():
    g = named_graph("petersen")
    spokes = [e for e in g.edges if e[1] - e[0] == 5 or (e[0] < 5 <= e[1])]
    d = two_factor(g, spokes)
    outer = next(i for i, c in enumerate(d.cycles) if set(c) == set(range(5)))
    assert len(free_edges(d, outer)) == 5


def test_free_edge_equivalence_and_claim_on_random_graphs():
    rng = random.Random(2024)
    for g in [named_graph(n) for n in CUBIC] + [random_bridgeless_cubic(rng, 16) for _ in range(150)]:
        d = two_factor(g)
        _check_decomp(d)
        for i, cyc in enumerate(d.cycles):
            if len(cyc) % 2 == 0:
                continue
            free = set(free_edges(d, i))
            for e in d.cycle_edges(i):
                assert (e in free) == _free_by_c4(d, e)
            assert odd_cycle_free_edge(d, i) in free


@pytest.mark.parametrize("name", CUBIC)
def test_avoid_c4_on_named_cubic(name):
    g = named_graph(name)
    c = avoid_rainbow_c4_cubic(g)
    assert is_proper(g, c) and c.colour_count <= 4 and not has_rainbow_c4(g, c)
    if name == "k33":
        assert c.colour_count == 3


def test_avoid_c4_on_1000_random_cubic_graphs():
    rng = random.Random(1)
    for _ in range(1000):
        g = random_bridgeless_cubic(rng, 16)
        c = avoid_rainbow_c4_cubic(g)
        assert is_proper(g, c) and not has_rainbow_c4(g, c)


def test_avoid_c4_preconditions():
    with pytest.raises(PreconditionError, match="3-regular"):
        avoid_rainbow_c4_cubic(named_graph("c5"))
    with pytest.raises(PreconditionError, match="connected"):
        avoid_rainbow_c4_cubic(named_graph("k4+k4"))
    # two K4-minus-an-edge blocks joined by a bridge
    bridged = Graph(10, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 2), (0, 4), (3, 4),
                         (5, 6), (5, 7), (6, 8), (7, 8), (6, 7), (5, 9), (8, 9), (4, 9)])
    assert structural_report(bridged).is_regular_of == 3 and structural_report(bridged).bridges
    with pytest.raises(PreconditionError, match="bridge"):
        avoid_rainbow_c4_cubic(bridged)


def _extend_all(g, u):
    rest = g.without_vertex(u)
    n = 0
    for c in enumerate_proper_colourings(rest):
        if has_rainbow_c4(rest, c):
            continue
        out = extend_through_degree2(g, u, c)
        assert out.is_total and is_proper(g, out) and not has_rainbow_c4(g, out)
        n += 1
    return n


def test_extend_case1_on_c5():
    g = named_graph("c5")
    assert _extend_all(g, 0) > 0


def test_extend_k4_subdivided():
    g = named_graph("k4_subdivided")
    u = next(v for v in range(g.n) if g.degree(v) == 2)
    assert _extend_all(g, u) > 0


def test_extend_case2_k23():
    # u is a degree-2 vertex of K_{2,3}; its neighbours share all three vertices of the other side
    g = named_graph("k23")
    u = next(v for v in range(g.n) if g.degree(v) == 2)
    v1, v2 = sorted(g.adj(u))
    assert len(g.adj(v1) & g.adj(v2)) == 3
    assert _extend_all(g, u) > 0


def test_extend_case3_with_square():
    # u - v1, v2; w common; v1 w z1 z2 a square; degrees stay <= 3
    g = Graph(7, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 1), (2, 6)])
    v1, v2 = 1, 2
    assert len(g.adj(v1) & g.adj(v2)) == 2
    assert _extend_all(g, 0) > 0


def test_extend_accepts_full_graph_colouring_and_checks_input():
    g = named_graph("c5")
    rest = g.without_vertex(0)
    c = next(enumerate_proper_colourings(rest))
    full = EdgeColouring.from_mapping(g, {e: c[e] for e in rest.edges})
    assert extend_through_degree2(g, 0, full) == extend_through_degree2(g, 0, c)
    with pytest.raises(PreconditionError):
        extend_through_degree2(named_graph("k4"), 0, EdgeColouring.empty(named_graph("k4")))


@given(st.integers(0, 10**9))
def test_random_generator_is_bridgeless_cubic(seed):
    g = random_bridgeless_cubic(random.Random(seed), 16)
    rep = structural_report(g)
    assert rep.is_regular_of == 3 and rep.connected and not rep.bridges and g.n <= 16
    assert random_bridgeless_cubic(random.Random(seed), 16) == g
