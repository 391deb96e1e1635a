import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from antiramsey.colouring import (
    EdgeColouring,
    chromatic_index,
    complete_to_proper,
    enumerate_m_bounded_colourings,
    enumerate_proper_colourings,
    heuristic_edge_order,
    is_m_bounded,
    is_proper,
    random_m_bounded_colouring,
    random_proper_colouring,
)
from antiramsey.constructions import lower_bound_partial_colouring, named_graph, nonmono_gadget, z3_coloured_bipartite
from antiramsey.corpus import hosts, small_hosts
from antiramsey.graph import FormatError, Graph
from antiramsey.oracles import brute_chromatic_index, partition_colourings

from conftest import graphs


def _is_canonical(cols, order):
    top = 0
    for e in order:
        if cols[e] > top + 1:
            return False
        top = max(top, cols[e])
    return True


def test_is_proper_examples():
    c4 = named_graph("c4")
    alt = EdgeColouring(c4, tuple(1 + i % 2 for i in range(4)))
    assert is_proper(c4, alt)
    p3 = named_graph("p3")
    assert not is_proper(p3, EdgeColouring(p3, (1, 1)))
    g, c = z3_coloured_bipartite(1)
    assert is_proper(g, c)


def test_m_bounded_examples():
    s = named_graph("star_4")
    mono = EdgeColouring(s, (1, 1, 1, 1))
    assert is_m_bounded(s, mono, 4) and not is_m_bounded(s, mono, 3)


def test_m1_equals_proper_on_random_colourings():
    rng = random.Random(11)
    corpus = list(hosts().values())
    for _ in range(10_000):
        g = rng.choice(corpus)
        cols = tuple(rng.randint(1, 4) for _ in range(g.m))
        c = EdgeColouring(g, cols)
        assert is_m_bounded(g, c, 1) == is_proper(g, c)


@pytest.mark.parametrize("name,chi", [("nonmono", 4), ("c5", 3), ("petersen", 4), ("k4", 3), ("k5", 5), ("k33", 3)])
def test_chromatic_index_examples(name, chi):
    assert chromatic_index(named_graph(name)) == chi


@given(graphs(max_n=6))
def test_chromatic_index_vizing_and_brute(g):
    if g.m == 0 or g.m > 8:
        return
    chi = chromatic_index(g)
    assert chi in (g.max_degree(), g.max_degree() + 1)
    assert chi == brute_chromatic_index(g)


@pytest.mark.parametrize("name,count", [("c3", 1), ("p3", 1), ("c4", 4)])
def test_canonical_counts(name, count):
    # C_4: {13}{24}, {13}{2}{4}, {24}{1}{3} and the rainbow one
    assert sum(1 for _ in enumerate_proper_colourings(named_graph(name))) == count


@pytest.mark.parametrize("name,g", sorted(small_hosts(8).items()))
def test_enumeration_complete_and_canonical(name, g):
    order = heuristic_edge_order(g)
    seen = set()
    for c in enumerate_proper_colourings(g):
        assert c.is_total and is_proper(g, c)
        assert _is_canonical(c.colours, order)
        seen.add(c.colours)
    assert len(seen) == sum(1 for _ in partition_colourings(g))


@pytest.mark.parametrize("name", ["c5", "k4", "bull", "star_3", "p5"])
@pytest.mark.parametrize("m", [2, 3])
def test_m_bounded_enumeration_matches_partitions(name, m):
    g = named_graph(name)
    got = {c.colours for c in enumerate_m_bounded_colourings(g, m)}
    assert all(is_m_bounded(g, EdgeColouring(g, cols), m) for cols in got)
    assert len(got) == sum(1 for _ in partition_colourings(g, m))


def test_palette_cap():
    g = named_graph("c5")
    assert list(enumerate_proper_colourings(g, 2)) == []
    assert all(c.colour_count <= 3 for c in enumerate_proper_colourings(g, 3))


def test_edge_order_heuristic():
    g = named_graph("triangle_pendant")
    order = heuristic_edge_order(g)
    keys = [-(g.degree(g.edges[e][0]) + g.degree(g.edges[e][1])) for e in order]
    assert keys == sorted(keys)


@given(graphs(max_n=8), st.integers(0, 10**6))
def test_complete_to_proper_from_empty(g, seed):
    c = complete_to_proper(g, EdgeColouring.empty(g))
    assert c.is_total and is_proper(g, c)
    r = complete_to_proper(g, EdgeColouring.empty(g), rng=random.Random(seed))
    assert r.is_total and is_proper(g, r)


def test_complete_to_proper_keeps_partial_and_rejects_improper():
    g, partial = lower_bound_partial_colouring(2)
    full = complete_to_proper(g, partial)
    assert all(p is None or p == f for p, f in zip(partial.colours, full.colours))
    k3 = named_graph("k3")
    with pytest.raises(ValueError):
        complete_to_proper(k3, EdgeColouring(k3, (1, 1, None)))
    assert complete_to_proper(k3, EdgeColouring(k3, (1, 2, None)), max_colours=2) is None


@given(graphs(max_n=8), st.integers(0, 10**6), st.integers(1, 3))
def test_random_colourings_valid(g, seed, m):
    rng = random.Random(seed)
    assert is_proper(g, random_proper_colouring(g, rng))
    assert is_m_bounded(g, random_m_bounded_colouring(g, m, rng), m)


def test_colouring_formats():
    g = nonmono_gadget()
    c = next(enumerate_proper_colourings(g))
    assert EdgeColouring.from_lines(g, c.to_lines()) == c
    assert EdgeColouring.from_json(g, c.to_json()) == c
    with pytest.raises(FormatError) as exc:
        EdgeColouring.from_lines(g, "0 1 1\n0 5 2\n")
    assert exc.value.line == 2
    with pytest.raises(FormatError):
        EdgeColouring.from_lines(g, "0 1 x\n")


def test_normalized_is_first_use():
    g = named_graph("p4")
    c = EdgeColouring(g, (7, 3, 7))
    assert c.normalized().colours == (1, 2, 1)
