"""Undirected simple graphs on dense integer vertex ids, plus structural metrics."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class FormatError(ValueError):
    """Malformed input file; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with vertices ``0..n-1``.

    Edge ids follow construction order, which callers (gadget builders,
    colouring files) rely on for reproducible output.
    """

    __slots__ = ("n", "edges", "labels", "_adj", "_index")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), labels: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normed: list[Edge] = []
        index: dict[Edge, int] = {}
        adj: list[set[int]] = [set() for _ in range(n)]
        for raw in edges:
            u, v = int(raw[0]), int(raw[1])
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            e = norm_edge(u, v)
            if e in index:
                raise ValueError(f"parallel edge {e}")
            index[e] = len(normed)
            normed.append(e)
            adj[u].add(v)
            adj[v].add(u)
        if labels is not None and len(labels) != n:
            raise ValueError("labels must have one entry per vertex")
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(normed)
        self.labels: tuple[str, ...] | None = tuple(labels) if labels is not None else None
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self._index = index

    @property
    def m(self) -> int:
        return len(self.edges)

    def adj(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self._index

    def edge_id(self, u: int, v: int) -> int:
        return self._index[norm_edge(u, v)]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def incident_edges(self, v: int) -> list[int]:
        return [self._index[norm_edge(v, w)] for w in sorted(self._adj[v])]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def edge_subgraph(self, edge_ids: Iterable[int]) -> "Graph":
        """Same vertex set, only the chosen edges (in the given order)."""
        return Graph(self.n, [self.edges[i] for i in edge_ids], self.labels)

    def without_vertex(self, v: int) -> "Graph":
        """Delete the edges at ``v``; ``v`` stays as an isolated vertex so ids are kept."""
        return Graph(self.n, [e for e in self.edges if v not in e], self.labels)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in sorted(self._adj[x]):
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- text formats -----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        rows = [(i + 1, line.split()) for i, line in enumerate(text.splitlines())]
        rows = [(i, parts) for i, parts in rows if parts and not parts[0].startswith("#")]
        if not rows:
            raise FormatError("empty graph file", 1)
        lineno, head = rows[0]
        if len(head) != 2:
            raise FormatError("header must be 'n m'", lineno)
        try:
            n, m = int(head[0]), int(head[1])
        except ValueError:
            raise FormatError("header must contain two integers", lineno) from None
        body = rows[1:]
        if len(body) != m:
            raise FormatError(f"header announces {m} edges, found {len(body)}", lineno)
        edges = []
        for lineno, parts in body:
            if len(parts) != 2:
                raise FormatError("edge line must be 'u v'", lineno)
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise FormatError("edge endpoints must be integers", lineno) from None
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise FormatError(f"invalid edge {u} {v}", lineno)
            if norm_edge(u, v) in {norm_edge(*e) for e in edges}:
                raise FormatError(f"duplicate edge {u} {v}", lineno)
            edges.append((u, v))
        return cls(n, edges)

    def to_dot(self, name: str = "G", edge_labels: dict[int, str] | None = None) -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            lines.append(f'  {v} [label="{self.label(v)}"];')
        for i, (u, v) in enumerate(self.edges):
            if edge_labels and i in edge_labels:
                lines.append(f'  {u} -- {v} [label="{edge_labels[i]}"];')
            else:
                lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    edges = []
    labels: list[str] = []
    offset = 0
    for k, g in enumerate(graphs):
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        labels.extend(f"{k}:{g.label(v)}" for v in range(g.n))
        offset += g.n
    return Graph(offset, edges, labels)


# -- orderings -------------------------------------------------------------


@dataclass(frozen=True)
class VertexOrdering:
    order: tuple[int, ...]
    back_degree: tuple[int, ...]  # indexed by vertex id

    @property
    def width(self) -> int:
        return max(self.back_degree, default=0)


def ordering_for(g: Graph, order: Sequence[int]) -> VertexOrdering:
    pos = {v: i for i, v in enumerate(order)}
    back = [0] * g.n
    for v in order:
        back[v] = sum(1 for w in g.adj(v) if pos[w] < pos[v])
    return VertexOrdering(tuple(order), tuple(back))


def degeneracy(g: Graph) -> tuple[int, VertexOrdering]:
    """Smallest d with an ordering where each vertex has at most d earlier neighbours.

    Repeatedly strips a minimum-degree vertex (smallest id on ties); the
    reversed removal order is the witness.
    """
    alive = set(range(g.n))
    deg = g.degrees()
    removed = []
    d = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        removed.append(v)
        alive.remove(v)
        for w in g.adj(v):
            if w in alive:
                deg[w] -= 1
    ordering = ordering_for(g, removed[::-1])
    assert ordering.width == d
    return d, ordering


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adj(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


@dataclass(frozen=True)
class StructuralReport:
    connected: bool
    bridges: list[Edge]
    cut_vertices: list[int]
    is_regular_of: int | None
    max_degree: int
    min_degree: int

    def as_dict(self) -> dict:
        return {
            "connected": self.connected,
            "bridges": [list(e) for e in self.bridges],
            "cut_vertices": self.cut_vertices,
            "is_regular_of": self.is_regular_of,
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
        }


def _lowlink(g: Graph) -> tuple[list[Edge], list[int]]:
    disc = [-1] * g.n
    low = [0] * g.n
    bridges: list[Edge] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # iterative DFS: (vertex, parent, neighbour iterator)
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(sorted(g.adj(root))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(sorted(g.adj(w)))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.append(norm_edge(parent, v))
                if parent != root and low[v] >= disc[parent]:
                    cuts.add(parent)
        if root_children >= 2:
            cuts.add(root)
    return sorted(bridges), sorted(cuts)


def structural_report(g: Graph) -> StructuralReport:
    bridges, cuts = _lowlink(g)
    degs = g.degrees()
    regular = degs[0] if degs and all(d == degs[0] for d in degs) else None
    return StructuralReport(
        connected=g.is_connected(),
        bridges=bridges,
        cut_vertices=cuts,
        is_regular_of=regular,
        max_degree=g.max_degree(),
        min_degree=g.min_degree(),
    )


# -- automorphisms and copies ------------------------------------------------


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms as tuples ``perm[v] = image of v``; identity first."""
    n = g.n
    degs = g.degrees()
    result: list[tuple[int, ...]] = []
    perm = [-1] * n
    used = [False] * n

    def extend(v: int) -> None:
        if v == n:
            result.append(tuple(perm))
            return
        for w in range(n):
            if used[w] or degs[w] != degs[v]:
                continue
            if all((u in g.adj(v)) == (perm[u] in g.adj(w)) for u in range(v)):
                perm[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
        perm[v] = -1

    extend(0)
    return result


def _search_order(h: Graph) -> list[int]:
    # each vertex after the first of its component has an earlier neighbour
    order: list[int] = []
    for comp in sorted(h.components(), key=lambda c: (-len(c), c)):
        start = max(comp, key=lambda v: (h.degree(v), -v))
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(h.adj(x), key=lambda y: (-h.degree(y), y)):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


def monomorphisms(g: Graph, h: Graph) -> Iterator[tuple[int, ...]]:
    """Injective vertex maps ``phi`` (indexed by h-vertex) sending edges of h to edges of g."""
    order = _search_order(h)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[w for w in h.adj(v) if pos[w] < pos[v]] for v in order]
    phi = [-1] * h.n
    used = [False] * g.n
    all_vertices = range(g.n)

    def extend(i: int) -> Iterator[tuple[int, ...]]:
        if i == len(order):
            yield tuple(phi)
            return
        v = order[i]
        back = earlier[i]
        if back:
            cands = set(g.adj(phi[back[0]]))
            for w in back[1:]:
                cands &= g.adj(phi[w])
            cands = sorted(cands)
        else:
            cands = all_vertices
        need = h.degree(v)
        for x in cands:
            if used[x] or g.degree(x) < need:
                continue
            phi[v] = x
            used[x] = True
            yield from extend(i + 1)
            used[x] = False
        phi[v] = -1

    if h.n <= g.n:
        yield from extend(0)


def enumerate_copies(g: Graph, h: "Graph | object") -> Iterator[frozenset[int]]:
    """Each subgraph of ``g`` isomorphic to ``h`` once, as a set of g-edge ids.

    ``h`` may be a :class:`Graph` or a pattern object exposing ``graph`` and
    ``automorphisms``.  Among the maps in one automorphism orbit only the
    lexicographically smallest is kept.
    """
    hg: Graph = getattr(h, "graph", h)  # type: ignore[assignment]
    autos = getattr(h, "automorphisms", None)
    if autos is None:
        autos = automorphisms(hg)
    if any(hg.degree(v) == 0 for v in range(hg.n)):
        raise ValueError("pattern must not have isolated vertices")
    nontrivial = [a for a in autos if any(a[v] != v for v in range(hg.n))]
    for phi in monomorphisms(g, hg):
        if any(tuple(phi[a[v]] for v in range(hg.n)) < phi for a in nontrivial):
            continue
        yield frozenset(g.edge_id(phi[u], phi[v]) for u, v in hg.edges)
