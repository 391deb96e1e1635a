"""Builders for the named host graphs, gadgets and explicit colourings."""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from pathlib import Path

from .colouring import EdgeColouring
from .graph import Graph, disjoint_union, norm_edge
from .patterns import classify, is_exceptional, MATCHING, STAR


# -- cycle gadgets -----------------------------------------------------------


@dataclass(frozen=True)
class GadgetLayout:
    """Vertex roles of the cycle blow-up G_{k,d} (all indices 1-based)."""

    k: int
    d: int

    @property
    def even(self) -> bool:
        return self.k % 2 == 0

    @property
    def hub_count(self) -> int:
        return self.k // 2 if self.even else (self.k + 1) // 2

    @property
    def segment_count(self) -> int:
        """Number of hub-to-hub segments carrying d parallel paths of length two."""
        return self.hub_count if self.even else self.hub_count - 1

    @property
    def vertex_count(self) -> int:
        return self.hub_count + self.segment_count * self.d

    def hub(self, i: int) -> int:
        return i - 1

    def par(self, i: int, j: int) -> int:
        return self.hub_count + (i - 1) * self.d + (j - 1)

    def next_hub(self, i: int) -> int:
        return self.hub(i % self.hub_count + 1)


def gadget_layout(k: int, d: int) -> GadgetLayout:
    if k < 3:
        raise ValueError("gadget needs cycle length k >= 3")
    if d < 1:
        raise ValueError("gadget needs multiplicity d >= 1")
    return GadgetLayout(k, d)


def gadget(k: int, d: int) -> Graph:
    """G_{k,d}: hubs joined cyclically by d parallel 2-paths (plus u_p u_1 for odd k)."""
    lay = gadget_layout(k, d)
    edges = []
    for i in range(1, lay.segment_count + 1):
        for j in range(1, d + 1):
            edges.append((lay.hub(i), lay.par(i, j)))
            edges.append((lay.par(i, j), lay.next_hub(i)))
    if not lay.even:
        edges.append((lay.hub(lay.hub_count), lay.hub(1)))
    labels = [f"u{i}" for i in range(1, lay.hub_count + 1)]
    labels += [f"v{i},{j}" for i in range(1, lay.segment_count + 1) for j in range(1, d + 1)]
    return Graph(lay.vertex_count, edges, labels)


# -- named graphs --------------------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 2:
        raise ValueError("paths need at least 2 vertices")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(s: int, t: int) -> Graph:
    return Graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def star(t: int) -> Graph:
    return complete_bipartite(1, t)


def matching(t: int) -> Graph:
    return Graph(2 * t, [(2 * i, 2 * i + 1) for i in range(t)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def prism() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def k4_subdivided() -> Graph:
    # K4 on 0..3 with edge 01 replaced by the path 0-4-1
    return Graph(5, [(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def bull() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)])


def triangle_pendant() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def chair() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (2, 3), (1, 4)])


def nonmono_gadget() -> Graph:
    """8-cycle v0..v7, hub w joined to the even v's, chords v0v4 and v2v6."""
    cyc = [(k, (k + 1) % 8) for k in range(8)]
    spokes = [(2 * k, 8) for k in range(4)]
    labels = [f"v{k}" for k in range(8)] + ["w"]
    return Graph(9, cyc + spokes + [(0, 4), (2, 6)], labels)


_FIXED = {
    "petersen": petersen,
    "prism": prism,
    "k4_subdivided": k4_subdivided,
    "bull": bull,
    "triangle_pendant": triangle_pendant,
    "chair": chair,
    "nonmono": nonmono_gadget,
    "nonmono_gadget": nonmono_gadget,
}


def named_graph(name: str) -> Graph:
    """Graph from a catalogue name.

    Accepted: petersen, prism, bull, chair, triangle_pendant, k4_subdivided,
    nonmono, ``kN`` / ``k_N`` (complete), ``kST`` / ``k_S_T`` (complete
    bipartite), ``c_N``, ``p_N`` (N vertices), ``star_N`` (N edges),
    ``matching_N`` / ``NkK2``, plus ``a+b`` for disjoint unions and ``TxNAME``
    for T disjoint copies.
    """
    key = name.strip().lower()
    if "+" in key:
        return disjoint_union([named_graph(part) for part in key.split("+")])
    m = re.fullmatch(r"(\d+)x(.+)", key)
    if m:
        return disjoint_union([named_graph(m.group(2))] * int(m.group(1)))
    if key in _FIXED:
        return _FIXED[key]()
    patterns = [
        (r"k_?(\d)", lambda a: complete(int(a))),
        (r"k_(\d+)", lambda a: complete(int(a))),
        (r"k(\d)(\d)", lambda a, b: complete_bipartite(int(a), int(b))),
        (r"k_(\d+)_(\d+)", lambda a, b: complete_bipartite(int(a), int(b))),
        (r"c_?(\d+)", lambda a: cycle(int(a))),
        (r"p_?(\d+)", lambda a: path(int(a))),
        (r"star_?(\d+)", lambda a: star(int(a))),
        (r"matching_?(\d+)", lambda a: matching(int(a))),
        (r"(\d+)k_?2", lambda a: matching(int(a))),
    ]
    for rx, build in patterns:
        m = re.fullmatch(rx, key)
        if m:
            return build(*m.groups())
    raise ValueError(f"unknown graph name {name!r}")


# -- class 2 regular graphs of high girth ----------------------------------------


def class2_regular(k: int) -> Graph:
    """Connected k-regular graph with girth >= k + 2 and chromatic index k + 1.

    k = 2 gives C5.  k = 3 joins two copies of Petersen minus an edge
    ``x_i y_i`` through adjacent new vertices u (to x1, y1) and v (to x2, y2);
    u is a cut vertex.
    """
    if k == 2:
        return cycle(5)
    if k != 3:
        raise ValueError("class2_regular supports only k in {2, 3}")
    base = petersen()
    x, y = base.edges[0]
    rest = [e for e in base.edges if e != (x, y)]
    u, v = 20, 21
    edges = list(rest)
    edges += [(u, x), (u, y), (u, v), (v, x + 10), (v, y + 10)]
    edges += [(a + 10, b + 10) for a, b in rest]
    labels = [f"H1:{i}" for i in range(10)] + [f"H2:{i}" for i in range(10)] + ["u", "v"]
    return Graph(22, edges, labels)


# -- explicit colourings ------------------------------------------------------------


def _z3_vector(x: int, r: int) -> tuple[int, ...]:
    return tuple((x // 3**i) % 3 for i in range(r))


def _z3_index(vec: tuple[int, ...]) -> int:
    return sum(c * 3**i for i, c in enumerate(vec))


def z3_coloured_bipartite(r: int) -> tuple[Graph, EdgeColouring]:
    """K_{3^r,3^r} with sides indexed by Z_3^r and edge uv coloured by u - v."""
    if r <= 0:
        raise ValueError("r must be positive")
    size = 3**r
    g = complete_bipartite(size, size)
    colours = []
    for a, b in g.edges:
        u, v = _z3_vector(a, r), _z3_vector(b - size, r)
        diff = tuple((p - q) % 3 for p, q in zip(u, v))
        colours.append(_z3_index(diff) + 1)
    return g, EdgeColouring(g, tuple(colours))


def lower_bound_partial_colouring(r: int) -> tuple[Graph, EdgeColouring]:
    """G_{4r,3(r-1)} with the segments leaving even hubs coloured so no C_{4r} can be rainbow.

    At an even hub i the edge to v_{i,j} gets colour j and the edge onwards
    gets j + 1, or j - 2 when 3 divides j; every such segment uses two colours
    out of one triple {3t+1, 3t+2, 3t+3}, so any two such segments collide.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    d = 3 * (r - 1)
    g = gadget(4 * r, d)
    lay = gadget_layout(4 * r, d)
    assignment: dict[tuple[int, int], int] = {}
    for i in range(2, 2 * r + 1, 2):
        for j in range(1, d + 1):
            assignment[(lay.hub(i), lay.par(i, j))] = j
            assignment[(lay.par(i, j), lay.next_hub(i))] = j + 1 if j % 3 else j - 2
    return g, EdgeColouring.from_mapping(g, assignment)


# -- forest hosts --------------------------------------------------------------------


def _strip_isolated(g: Graph) -> Graph:
    keep = [v for v in range(g.n) if g.degree(v) > 0]
    pos = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), [(pos[u], pos[v]) for u, v in g.edges])


def _identify(g: Graph, a: int, b: int) -> Graph:
    # merge vertex b into a and compact ids
    mapping = {}
    nxt = 0
    for v in range(g.n):
        if v == b:
            continue
        mapping[v] = nxt
        nxt += 1
    mapping[b] = mapping[a]
    return Graph(g.n - 1, [(mapping[u], mapping[v]) for u, v in g.edges])


@dataclass(frozen=True)
class HostStep:
    forest_edges: int
    components: int
    tree_edges: int
    rest_edges: int
    copies: int


def forest_host(f: Graph, trace: list[HostStep] | None = None) -> Graph:
    """Host of max degree e(f) - 1 in which every proper colouring has a rainbow ``f``.

    One tree: the class-2 regular graph of degree v(f) - 2.  Several trees:
    merge a smallest tree T into the rest R at one vertex to get a forest
    with one component fewer, build its host recursively and take
    C(e(T) + e(R), e(T)) + 1 disjoint copies.
    """
    f = _strip_isolated(f)
    if f.m == 0 or not f.is_forest():
        raise ValueError("forest_host needs a non-empty forest")
    if classify(f) == STAR:
        raise ValueError("stars have AR_d = e(F); no host of degree e(F) - 1 exists")
    if classify(f) == MATCHING and f.m == 2:
        raise ValueError("2K2 has AR_d = 2 = e(F); no host of degree 1 exists")
    if f.m - 1 not in (2, 3):
        raise ValueError("only forests with 3 or 4 edges are supported (base host degree 2 or 3)")
    comps = [c for c in f.components() if len(c) > 1]
    if len(comps) == 1:
        return class2_regular(f.n - 2)
    tree = min(comps, key=lambda c: (len(c) - 1, c))
    rest = [v for c in comps if c is not tree for v in c]
    a = len(tree) - 1
    b = f.m - a
    merged = None
    for t_vertex in tree:
        for r_vertex in rest:
            cand = _identify(f, r_vertex, t_vertex)
            if not is_exceptional(cand):
                merged = cand
                break
        if merged is not None:
            break
    assert merged is not None, "a non-star identification always exists"
    copies = math.comb(a + b, a) + 1
    if trace is not None:
        trace.append(HostStep(f.m, len(comps), a, b, copies))
    inner = forest_host(merged, trace)
    return disjoint_union([inner] * copies)


# -- graph spec resolution (CLI and pattern flags) ---------------------------------------


def resolve_graph(spec: str) -> Graph:
    """``gadget:k,d``, ``class2:k``, ``host:<forest>``, a graph file, or a catalogue name."""
    if spec.startswith("gadget:"):
        k, d = (int(x) for x in spec[len("gadget:"):].split(","))
        return gadget(k, d)
    if spec.startswith("class2:"):
        return class2_regular(int(spec[len("class2:"):]))
    if spec.startswith("host:"):
        return forest_host(resolve_graph(spec[len("host:"):]))
    p = Path(spec)
    if p.is_file():
        return Graph.from_text(p.read_text())
    return named_graph(spec)


__all__ = [
    "GadgetLayout", "gadget_layout", "gadget", "cycle", "path", "complete", "complete_bipartite",
    "star", "matching", "petersen", "prism", "k4_subdivided", "bull", "triangle_pendant", "chair",
    "nonmono_gadget", "named_graph", "class2_regular", "z3_coloured_bipartite",
    "lower_bound_partial_colouring", "forest_host", "HostStep", "resolve_graph", "norm_edge",
]
