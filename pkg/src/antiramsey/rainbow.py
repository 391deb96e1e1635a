"""Rainbow copies: detection, the incremental pruning hook, and two constructive embeddings."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .colouring import EdgeColouring, is_m_bounded, is_proper
from .errors import PreconditionError, ProofStepError
from .graph import Graph, _search_order, enumerate_copies, girth, structural_report
from .patterns import Pattern, STAR, TREE, classify


def _as_graph(h: Pattern | Graph) -> Graph:
    return h.graph if isinstance(h, Pattern) else h


@dataclass(frozen=True)
class Embedding:
    pattern: Graph
    host: Graph
    vertex_map: tuple[int, ...]  # pattern vertex -> host vertex

    @property
    def edge_ids(self) -> tuple[int, ...]:
        """Host edge ids of the image, in pattern edge order."""
        return tuple(self.host.edge_id(self.vertex_map[u], self.vertex_map[v]) for u, v in self.pattern.edges)

    def colours(self, c: EdgeColouring) -> list[int | None]:
        return [c.colours[e] for e in self.edge_ids]

    def is_valid(self) -> bool:
        phi = self.vertex_map
        if len(phi) != self.pattern.n or len(set(phi)) != len(phi):
            return False
        return all(self.host.has_edge(phi[u], phi[v]) for u, v in self.pattern.edges)

    def is_rainbow(self, c: EdgeColouring) -> bool:
        cols = self.colours(c)
        return None not in cols and len(set(cols)) == len(cols)

    def to_json(self, c: EdgeColouring | None = None) -> dict:
        out: dict = {"vertex_map": list(self.vertex_map), "edges": [list(self.host.edges[e]) for e in self.edge_ids]}
        if c is not None:
            out["colours"] = self.colours(c)
            out["rainbow"] = self.is_rainbow(c)
        return out


# -- detection -------------------------------------------------------------------


def find_rainbow_copy(g: Graph, c: EdgeColouring, h: Pattern | Graph) -> Embedding | None:
    """A rainbow copy of ``h`` under ``c`` if one exists.

    Direct backtracking over vertex maps that prunes as soon as two image
    edges share a colour; independent of the copy index used by the search.
    """
    hg = _as_graph(h)
    if hg.n > g.n:
        return None
    order = _search_order(hg)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[w for w in hg.adj(v) if pos[w] < pos[v]] for v in order]
    phi = [-1] * hg.n
    used = [False] * g.n
    seen_colours: set[int] = set()
    cols = c.colours

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        back = earlier[i]
        cands = sorted(g.adj(phi[back[0]])) if back else range(g.n)
        for x in cands:
            if used[x]:
                continue
            new = []
            ok = True
            for w in back:
                y = phi[w]
                if not g.has_edge(x, y):
                    ok = False
                    break
                col = cols[g.edge_id(x, y)]
                if col is None or col in seen_colours or col in new:
                    ok = False
                    break
                new.append(col)
            if not ok:
                continue
            phi[v] = x
            used[x] = True
            seen_colours.update(new)
            if extend(i + 1):
                return True
            seen_colours.difference_update(new)
            used[x] = False
            phi[v] = -1
        return False

    if extend(0):
        return Embedding(hg, g, tuple(phi))
    return None


class CopyIndex:
    """All copies of a pattern in a host, with an edge -> copies lookup."""

    def __init__(self, g: Graph, h: Pattern | Graph):
        self.graph = g
        self.copies: list[tuple[int, ...]] = sorted(tuple(sorted(cp)) for cp in enumerate_copies(g, h))
        self.by_edge: list[list[int]] = [[] for _ in range(g.m)]
        for cid, cp in enumerate(self.copies):
            for e in cp:
                self.by_edge[e].append(cid)

    def __len__(self) -> int:
        return len(self.copies)

    def covered_edges(self) -> set[int]:
        return {e for e in range(self.graph.m) if self.by_edge[e]}


def has_rainbow_completion_conflict(
    g: Graph,
    c_partial: EdgeColouring,
    h: Pattern | Graph,
    last_edge: int | tuple[int, int],
    index: CopyIndex | None = None,
) -> bool:
    """True iff some copy of ``h`` through ``last_edge`` is fully coloured and rainbow."""
    if isinstance(last_edge, tuple):
        last_edge = g.edge_id(*last_edge)
    if index is None:
        index = CopyIndex(g, h)
    cols = c_partial.colours
    for cid in index.by_edge[last_edge]:
        seen = [cols[e] for e in index.copies[cid]]
        if None not in seen and len(set(seen)) == len(seen):
            return True
    return False


# -- greedy embedding into complete graphs ------------------------------------------------


def greedy_bound(h: Pattern, m: int = 1) -> int:
    """Smallest n for which the greedy embedding into K_n is guaranteed: m k e - m k + v."""
    k = h.degeneracy
    return m * k * h.e - m * k + h.v


def greedy_rainbow_embed(n: int, c: EdgeColouring, h: Pattern, m: int = 1) -> Embedding:
    """Rainbow copy of ``h`` in K_n built vertex by vertex along a degeneracy order.

    Each new host vertex is the smallest unused id whose edges back to the
    already placed neighbours avoid every colour seen so far (and, for
    ``m > 1``, avoid each other).
    """
    g = c.graph
    if g.n != n or g.m != n * (n - 1) // 2:
        raise PreconditionError("colouring must be on the complete graph K_n")
    if not c.is_total:
        raise PreconditionError("colouring must be total")
    if not is_m_bounded(g, c, m):
        raise PreconditionError(f"colouring is not {m}-bounded" if m > 1 else "colouring is not proper")
    need = greedy_bound(h, m)
    if n < need:
        raise PreconditionError(f"n = {n} is below the guaranteed bound {need}")
    hg = h.graph
    order = h.degeneracy_order.order
    cols = c.colours
    placed: list[int] = []  # host vertex per position in order
    taken: set[int] = set()
    seen: set[int] = set()
    for ell, u in enumerate(order):
        back = [i for i in range(ell) if hg.has_edge(order[i], u)]
        choice = None
        for w in range(n):
            if w in taken:
                continue
            new = [cols[g.edge_id(placed[i], w)] for i in back]
            if any(x in seen for x in new) or len(set(new)) != len(new):
                continue
            choice = w
            seen.update(new)
            break
        if choice is None:
            raise ProofStepError(f"no admissible host vertex for pattern vertex {u} (step {ell + 1})")
        placed.append(choice)
        taken.add(choice)
    phi = [0] * hg.n
    for u, w in zip(order, placed):
        phi[u] = w
    emb = Embedding(hg, g, tuple(phi))
    if not (emb.is_valid() and emb.is_rainbow(c)):
        raise ProofStepError("greedy embedding is not a rainbow copy")
    return emb


# -- tree embedding into class 2 regular graphs --------------------------------------------


@dataclass(frozen=True)
class TreeSplit:
    x0: int
    x1: int
    x2: int
    t1_order: tuple[int, ...]  # y_1..y_s
    t2_order: tuple[int, ...]  # z_1..z_t
    parent: dict[int, int]


def split_tree(t: Graph) -> TreeSplit:
    """Leaf x0, its neighbour x1, a non-leaf neighbour x2 of x1, and growth orders of both halves."""
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    x0 = x1 = x2 = None
    for leaf in leaves:
        (nb,) = t.adj(leaf)
        inner = sorted(w for w in t.adj(nb) if t.degree(w) > 1)
        if inner:
            x0, x1, x2 = leaf, nb, inner[0]
            break
    if x0 is None:
        raise PreconditionError("tree is a star")
    parent: dict[int, int] = {}

    def grow(root: int, banned: set[int]) -> tuple[int, ...]:
        out = []
        seen = {root} | banned
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(t.adj(x)):
                if y not in seen:
                    seen.add(y)
                    parent[y] = x
                    out.append(y)
                    queue.append(y)
        return tuple(out)

    t1 = grow(x1, {x0, x2})
    t2 = grow(x2, {x1})
    return TreeSplit(x0, x1, x2, t1, t2, parent)


def seed_pair(g: Graph, c: EdgeColouring) -> tuple[int, int] | None:
    """Adjacent (u1, u2) with the colours at u2 not contained in those at u1, scanning edges in id order."""
    for a, b in g.edges:
        na, nb = c.incident_colours(a), c.incident_colours(b)
        if not nb <= na:
            return a, b
        if not na <= nb:
            return b, a
    return None


def lemma31_embed(g: Graph, c: EdgeColouring, t: Pattern | Graph) -> Embedding:
    """Rainbow copy of a non-star tree on k + 2 vertices in a k-regular graph of girth >= k + 2.

    Requires a seed edge u1u2 whose colour sets at the ends are not nested
    that way round; every proper colouring of a graph that is not
    k-edge-colourable has one.  The far half of the tree grows from u2 first,
    then the near half from u1, and the split-off leaf goes last.
    """
    tg = _as_graph(t)
    if classify(tg) == STAR:
        raise PreconditionError("tree must not be a star")
    if classify(tg) != TREE:
        raise PreconditionError("pattern must be a tree")
    rep = structural_report(g)
    k = rep.is_regular_of
    if k is None or not rep.connected:
        raise PreconditionError("host must be connected and regular")
    if tg.n != k + 2:
        raise PreconditionError(f"tree must have k + 2 = {k + 2} vertices")
    if girth(g) < k + 2:
        raise PreconditionError(f"host girth must be at least {k + 2}")
    if not c.is_total or not is_proper(g, c):
        raise PreconditionError("colouring must be total and proper")
    pair = seed_pair(g, c)
    if pair is None:
        raise PreconditionError("all vertices see the same colours: the colouring is a k-edge-colouring")
    u1, u2 = pair
    split = split_tree(tg)
    cols = c.colours

    def col(a: int, b: int) -> int:
        return cols[g.edge_id(a, b)]  # type: ignore[return-value]

    phi: dict[int, int] = {split.x1: u1, split.x2: u2}
    image: list[tuple[int, int]] = [(u1, u2)]
    n_u1 = c.incident_colours(u1)

    def place(z: int, forbidden_edges: list[tuple[int, int]], extra_ok=lambda w: True) -> int:
        anchor = phi[split.parent[z]]
        forbidden = {col(a, b) for a, b in forbidden_edges}
        used = set(phi.values())
        for w in sorted(g.adj(anchor)):
            if w in used or col(anchor, w) in forbidden or not extra_ok(w):
                continue
            return w
        raise ProofStepError(f"no admissible image for tree vertex {z}")

    for i, z in enumerate(split.t2_order):
        if i == 0:
            w = place(z, [], lambda w: col(u2, w) not in n_u1)
        else:
            w = place(z, image)
        phi[z] = w
        image.append((phi[split.parent[z]], w))
    first_far_edge = image[1]
    for y in split.t1_order:
        w = place(y, image)
        phi[y] = w
        image.append((phi[split.parent[y]], w))
    # the leaf x0 hangs off u1; the edge u2 w1 is exempt since its colour is absent at u1
    exempt = [e for e in image if e != first_far_edge]
    used = set(phi.values())
    forbidden = {col(a, b) for a, b in exempt}
    u0 = next((w for w in sorted(g.adj(u1)) if w not in used and col(u1, w) not in forbidden), None)
    if u0 is None:
        raise ProofStepError("no admissible image for the split-off leaf")
    phi[split.x0] = u0
    emb = Embedding(tg, g, tuple(phi[v] for v in range(tg.n)))
    if not emb.is_valid() or not emb.is_rainbow(c):
        raise ProofStepError("constructed tree copy is not rainbow")
    return emb
