"""Rainbow-C4-free colourings of subcubic graphs via perfect matchings and free edges."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .colouring import EdgeColouring, is_proper
from .errors import PreconditionError, ProofStepError
from .graph import Edge, Graph, enumerate_copies, norm_edge, structural_report
from .patterns import pattern


def _odd_component(g: Graph, free: set[int]) -> bool:
    seen: set[int] = set()
    for s in free:
        if s in seen:
            continue
        size = 0
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            size += 1
            for y in g.adj(x):
                if y in free and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if size % 2:
            return True
    return False


def perfect_matching(g: Graph) -> list[Edge] | None:
    """A perfect matching by backtracking on the lowest unmatched vertex, or None.

    A branch is abandoned as soon as the unmatched vertices span an odd component.
    """
    if g.n % 2:
        return None
    free = set(range(g.n))
    chosen: list[Edge] = []

    def extend() -> bool:
        if not free:
            return True
        if _odd_component(g, free):
            return False
        v = min(free)
        for w in sorted(g.adj(v)):
            if w in free:
                free.discard(v)
                free.discard(w)
                chosen.append(norm_edge(v, w))
                if extend():
                    return True
                chosen.pop()
                free.add(v)
                free.add(w)
        return False

    return sorted(chosen) if extend() else None


@dataclass(frozen=True)
class TwoFactorDecomposition:
    graph: Graph
    matching: frozenset[Edge]
    cycles: tuple[tuple[int, ...], ...]

    def cycle_edges(self, idx: int) -> list[Edge]:
        cyc = self.cycles[idx]
        return [norm_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]


def two_factor(g: Graph, m: list[Edge] | None = None) -> TwoFactorDecomposition:
    """Cycles of G - M for a cubic graph G and perfect matching M."""
    if m is None:
        m = perfect_matching(g)
        if m is None:
            raise PreconditionError("graph has no perfect matching")
    mset = frozenset(norm_edge(*e) for e in m)
    covered = [v for e in mset for v in e]
    if sorted(covered) != list(range(g.n)):
        raise PreconditionError("M is not a perfect matching")
    rest = {v: sorted(w for w in g.adj(v) if norm_edge(v, w) not in mset) for v in range(g.n)}
    if any(len(nb) != 2 for nb in rest.values()):
        raise PreconditionError("G - M is not 2-regular")
    seen: set[int] = set()
    cycles = []
    for s in range(g.n):
        if s in seen:
            continue
        cyc = [s]
        seen.add(s)
        prev, cur = s, rest[s][0]
        while cur != s:
            cyc.append(cur)
            seen.add(cur)
            a, b = rest[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(tuple(cyc))
    return TwoFactorDecomposition(g, mset, tuple(cycles))


def free_edges(decomp: TwoFactorDecomposition, cycle_index: int) -> list[Edge]:
    """Edges v_i v_{i+1} of an odd cycle with none of v_{i-2}v_{i+1}, v_{i-1}v_{i+2}, v_i v_{i+3} in M."""
    cyc = decomp.cycles[cycle_index]
    n = len(cyc)
    if n % 2 == 0:
        raise ValueError("free edges are defined on odd cycles only")
    out = []
    for i in range(n):
        brackets = [(cyc[(i - 2) % n], cyc[(i + 1) % n]), (cyc[(i - 1) % n], cyc[(i + 2) % n]),
                    (cyc[i], cyc[(i + 3) % n])]
        if not any(a != b and norm_edge(a, b) in decomp.matching for a, b in brackets):
            out.append(norm_edge(cyc[i], cyc[(i + 1) % n]))
    return out


def odd_cycle_free_edge(decomp: TwoFactorDecomposition, cycle_index: int) -> Edge:
    """A free edge found by locating two consecutive positions outside I = {i : v_i v_{i+3} in M}."""
    cyc = decomp.cycles[cycle_index]
    n = len(cyc)
    if n % 2 == 0:
        raise ValueError("cycle is even")
    in_i = [norm_edge(cyc[i], cyc[(i + 3) % n]) in decomp.matching if n > 3 else False for i in range(n)]
    for i in range(n):
        if not in_i[(i + 1) % n] and not in_i[(i + 2) % n]:
            if in_i[i]:
                e = norm_edge(cyc[(i + 3) % n], cyc[(i + 4) % n])
            else:
                e = norm_edge(cyc[(i + 2) % n], cyc[(i + 3) % n])
            if e not in free_edges(decomp, cycle_index):
                raise ProofStepError(f"edge {e} chosen by the scan is not free")
            return e
    raise ProofStepError("odd cycle without two consecutive positions outside I")


def _rainbow_c4(g: Graph, c: EdgeColouring) -> frozenset[int] | None:
    cols = c.colours
    for cp in enumerate_copies(g, pattern("c4")):
        if len({cols[e] for e in cp}) == 4:
            return cp
    return None


def has_rainbow_c4(g: Graph, c: EdgeColouring) -> bool:
    return _rainbow_c4(g, c) is not None


def avoid_rainbow_c4_cubic(g: Graph) -> EdgeColouring:
    """Proper colouring of a connected bridgeless cubic graph with at most 4 colours and no rainbow C4.

    M gets colour 4, one free edge per odd cycle of G - M gets colour 3, the
    remaining paths and even cycles alternate colours 1 and 2.
    """
    rep = structural_report(g)
    if not rep.connected:
        raise PreconditionError("graph is not connected")
    if rep.is_regular_of != 3:
        raise PreconditionError("graph is not 3-regular")
    if rep.bridges:
        raise PreconditionError(f"graph has a bridge {rep.bridges[0]}")
    m = perfect_matching(g)
    if m is None:
        raise ProofStepError("bridgeless cubic graph without a perfect matching")
    decomp = two_factor(g, m)
    assign: dict[Edge, int] = {e: 4 for e in decomp.matching}
    for idx, cyc in enumerate(decomp.cycles):
        n = len(cyc)
        if n % 2:
            fe = odd_cycle_free_edge(decomp, idx)
            assign[fe] = 3
            # walk the path that remains, starting just after the free edge
            start = next(i for i in range(n) if norm_edge(cyc[i], cyc[(i + 1) % n]) == fe)
            walk = [norm_edge(cyc[(start + 1 + t) % n], cyc[(start + 2 + t) % n]) for t in range(n - 1)]
        else:
            walk = decomp.cycle_edges(idx)
        for t, e in enumerate(walk):
            assign[e] = 1 + t % 2
    c = EdgeColouring.from_mapping(g, assign)
    if not is_proper(g, c):
        raise ProofStepError("constructed colouring is not proper")
    if has_rainbow_c4(g, c):
        raise ProofStepError("constructed colouring has a rainbow C4")
    return c


def extend_through_degree2(g: Graph, u: int, c: EdgeColouring) -> EdgeColouring:
    """Colour the two edges at a degree-2 vertex ``u`` keeping the colouring proper and rainbow-C4-free.

    ``c`` colours either G - u (as returned by ``without_vertex``) or every
    edge of ``g`` except the two at ``u``.  Two fresh
    colours alpha < beta are used; the case is chosen by the size of the
    common neighbourhood of the neighbours v1 < v2 of ``u``.
    """
    if g.degree(u) != 2:
        raise PreconditionError("u must have degree 2")
    if g.max_degree() > 3:
        raise PreconditionError("max degree must be at most 3")
    v1, v2 = sorted(g.adj(u))
    at_u = {g.edge_id(u, v1), g.edge_id(u, v2)}
    rest = g.without_vertex(u)
    if c.graph != g:
        if c.graph != rest:
            raise PreconditionError("colouring must live on G or on G - u")
        c = EdgeColouring.from_mapping(g, {e: c[e] for e in rest.edges if c[e] is not None})
    if any((c.colours[e] is None) != (e in at_u) for e in range(g.m)):
        raise PreconditionError("colouring must cover exactly the edges not at u")
    base = EdgeColouring.from_mapping(rest, {g.edges[e]: c.colours[e] for e in range(g.m) if e not in at_u})
    if not is_proper(rest, base):
        raise PreconditionError("colouring of G - u is not proper")
    if has_rainbow_c4(rest, base):
        raise PreconditionError("colouring of G - u already has a rainbow C4")
    top = max(x for x in c.colours if x is not None) if len(at_u) < g.m else 0
    alpha, beta = top + 1, top + 2

    def col(a: int, b: int) -> int:
        return c.colours[g.edge_id(a, b)]  # type: ignore[return-value]

    common = sorted(g.adj(v1) & g.adj(v2))
    updates: dict[tuple[int, int], int] = {}
    if len(common) == 1:
        updates = {(u, v1): alpha, (u, v2): beta}
    elif len(common) == 3:
        w1, w2 = [w for w in common if w != u]
        ws = {1: w1, 2: w2}
        i = next((i for i in (1, 2) if col(v1, ws[i]) == col(v2, ws[3 - i])), None)
        if i is None:
            raise ProofStepError("C4 v1 w1 v2 w2 is rainbow")
        updates = {(v1, ws[3 - i]): alpha, (u, v1): col(v2, ws[i]), (u, v2): alpha}
    elif len(common) == 2:
        (w,) = [x for x in common if x != u]
        squares = []
        for z1 in sorted(rest.adj(w)):
            for z2 in sorted(rest.adj(v1)):
                if len({v1, w, z1, z2}) == 4 and rest.has_edge(z1, z2):
                    squares.append((z1, z2))
        if not squares:
            updates = {(v1, w): alpha, (u, v2): alpha, (u, v1): beta}
        else:
            if len(squares) != 1:
                raise ProofStepError(f"expected one C4 through v1 w, found {len(squares)}")
            z1, z2 = squares[0]
            if col(v1, w) == col(z1, z2):
                updates = {(v1, z2): alpha, (u, v1): col(v2, w), (u, v2): beta}
            elif col(v1, z2) == col(w, z1):
                updates = {(v1, w): alpha, (u, v2): alpha, (u, v1): beta}
            else:
                raise ProofStepError("C4 v1 w z1 z2 is rainbow")
    else:
        raise ProofStepError(f"unexpected common neighbourhood size {len(common)}")
    out = c.with_colours(updates)
    if not out.is_total or not is_proper(g, out):
        raise ProofStepError("extension is not a proper colouring")
    if has_rainbow_c4(g, out):
        raise ProofStepError("extension has a rainbow C4")
    return out


# -- random bridgeless cubic graphs -----------------------------------------------------------


def random_cubic(n: int, rng: random.Random, tries: int = 10000) -> Graph:
    """Uniform simple cubic graph on ``n`` vertices via the pairing model with rejection."""
    if n % 2 or n < 4:
        raise ValueError("cubic graphs need an even n >= 4")
    for _ in range(tries):
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for a, b in zip(points[::2], points[1::2]):
            e = norm_edge(a, b)
            if a == b or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return Graph(n, sorted(edges))
    raise RuntimeError("pairing model kept producing loops or multi-edges")


def random_bridgeless_cubic(rng: random.Random, max_n: int = 16, min_n: int = 4) -> Graph:
    """Connected bridgeless cubic graph on a random even order in [min_n, max_n]."""
    while True:
        n = rng.randrange(min_n // 2, max_n // 2 + 1) * 2
        g = random_cubic(n, rng)
        rep = structural_report(g)
        if rep.connected and not rep.bridges:
            return g
