"""Target graphs H: classification, precomputed orderings/automorphisms, known AR_d bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .graph import Graph, VertexOrdering, automorphisms, degeneracy, disjoint_union

STAR = "star"
MATCHING = "matching"
TREE = "tree-non-star"
FOREST = "forest"
CYCLE = "cycle"
OTHER = "other"


def _nontrivial_components(g: Graph) -> list[list[int]]:
    return [c for c in g.components() if len(c) > 1]


def classify(g: Graph) -> str:
    """One of star, matching, tree-non-star, forest, cycle, other (isolated vertices ignored)."""
    comps = _nontrivial_components(g)
    if not comps:
        return OTHER
    if g.is_forest():
        if len(comps) == 1:
            return STAR if g.max_degree() == g.m else TREE
        if all(len(c) == 2 for c in comps):
            return MATCHING
        return FOREST
    if len(comps) == 1 and all(g.degree(v) == 2 for v in comps[0]):
        return CYCLE
    return OTHER


def is_exceptional(g: Graph) -> bool:
    """Stars and the two-edge matching, the forests with AR_d = e rather than e - 1."""
    cls = classify(g)
    return cls == STAR or (cls == MATCHING and g.m == 2)


def _generators(group: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    if not group:
        return []
    n = len(group[0])
    identity = tuple(range(n))
    span = {identity}
    gens: list[tuple[int, ...]] = []
    for a in group:
        if a in span:
            continue
        gens.append(a)
        frontier = list(span)
        span = set(span)
        while frontier:
            p = frontier.pop()
            for g in gens:
                q = tuple(g[p[v]] for v in range(n))
                if q not in span:
                    span.add(q)
                    frontier.append(q)
    return gens


@dataclass(frozen=True, eq=False)
class Pattern:
    graph: Graph
    name: str
    degeneracy: int
    degeneracy_order: VertexOrdering
    automorphisms: tuple[tuple[int, ...], ...]
    classification: str
    # (base pattern, t) when this is base plus t disjoint edges
    matching_extension: tuple["Pattern", int] | None = field(default=None)

    @classmethod
    def from_graph(cls, g: Graph, name: str | None = None) -> "Pattern":
        if any(g.degree(v) == 0 for v in range(g.n)):
            raise ValueError("patterns must not have isolated vertices")
        if g.m == 0:
            raise ValueError("patterns need at least one edge")
        d, order = degeneracy(g)
        return cls(
            graph=g,
            name=name or f"H(n={g.n},m={g.m})",
            degeneracy=d,
            degeneracy_order=order,
            automorphisms=tuple(automorphisms(g)),
            classification=classify(g),
        )

    @property
    def generators(self) -> list[tuple[int, ...]]:
        return _generators(list(self.automorphisms))

    @property
    def exceptional(self) -> bool:
        return is_exceptional(self.graph)

    @property
    def v(self) -> int:
        return self.graph.n

    @property
    def e(self) -> int:
        return self.graph.m

    def __repr__(self) -> str:
        return f"Pattern({self.name!r}, {self.classification})"


@lru_cache(maxsize=None)
def pattern(name: str) -> Pattern:
    """Pattern from a catalogue name (see :func:`constructions.named_graph`)."""
    from .constructions import named_graph

    return Pattern.from_graph(named_graph(name), name)


def with_matching(base: Pattern, t: int) -> Pattern:
    """``base`` plus ``t`` disjoint edges."""
    if t < 1:
        raise ValueError("t must be positive")
    g = disjoint_union([base.graph] + [Graph(2, [(0, 1)])] * t)
    p = Pattern.from_graph(g, f"{base.name}+{t}k2")
    return Pattern(
        p.graph, p.name, p.degeneracy, p.degeneracy_order, p.automorphisms, p.classification, (base, t)
    )


@dataclass(frozen=True)
class Bounds:
    lower: int
    upper: int | None
    provenance: str

    def as_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "provenance": self.provenance}


def general_upper(h: Pattern) -> int:
    """Degeneracy bound k e - k + v - 1 on AR_d (one less than the local bound)."""
    k = h.degeneracy
    return k * h.e - k + h.v - 1


def ar_d_bounds(h: Pattern) -> Bounds:
    """Best known lower/upper bounds on AR_d(h)."""
    e = h.e
    cls = h.classification
    if cls in (STAR, MATCHING, TREE, FOREST):
        if h.exceptional:
            return Bounds(e, e, "forest theorem: star or 2K2, AR_d = e")
        return Bounds(e - 1, e - 1, "forest theorem: AR_d = e - 1")
    general = general_upper(h)
    if cls == CYCLE:
        k = h.v
        known = {3: (2, 2, "C3: triangle host"), 4: (4, 4, "C4: K_{2,4} host and cubic colouring"),
                 5: (4, 6, "C5: gadget G_{5,3} host")}
        if k in known:
            lo, up, why = known[k]
            return Bounds(lo, min(up, general), why)
        cyc = 2 * (k - 1) if k % 2 == 0 else 2 * (k + 2)
        return Bounds(k - 1, min(cyc, general), "cycle gadget bound; lower e - 1")
    if h.matching_extension is not None:
        base, t = h.matching_extension
        bb = ar_d_bounds(base)
        if bb.upper is not None and t >= bb.upper + 1 - base.e:  # any t >= AR_d(base) + 1 - e(base)
            return Bounds(e - 1, e - 1, "matching extension H_t with t >= t0 (no host built)")
    return Bounds(e - 1, general, "lower e - 1; upper from degeneracy")
