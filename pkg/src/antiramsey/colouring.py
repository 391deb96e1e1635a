"""Edge colourings: validity predicates, chromatic index, canonical enumeration and completion."""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .graph import FormatError, Graph, norm_edge


@dataclass(frozen=True, eq=False)
class EdgeColouring:
    """Colour per edge id of ``graph``; ``None`` marks an uncoloured edge.

    Colour ids are positive integers.
    """

    graph: Graph
    colours: tuple[int | None, ...]

    def __post_init__(self):
        if len(self.colours) != self.graph.m:
            raise ValueError("one colour slot per edge required")
        for c in self.colours:
            if c is not None and (not isinstance(c, int) or c < 1):
                raise ValueError(f"colour ids must be positive integers, got {c!r}")

    @classmethod
    def empty(cls, g: Graph) -> "EdgeColouring":
        return cls(g, (None,) * g.m)

    @classmethod
    def from_mapping(cls, g: Graph, assignment: Mapping[tuple[int, int], int]) -> "EdgeColouring":
        cols: list[int | None] = [None] * g.m
        for (u, v), c in assignment.items():
            cols[g.edge_id(u, v)] = c
        return cls(g, tuple(cols))

    def __getitem__(self, edge: int | tuple[int, int]) -> int | None:
        if isinstance(edge, tuple):
            edge = self.graph.edge_id(*edge)
        return self.colours[edge]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColouring):
            return NotImplemented
        return self.graph == other.graph and self.as_dict() == other.as_dict()

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.as_dict().items())))

    def __repr__(self) -> str:
        return f"EdgeColouring({self.as_dict()})"

    @property
    def is_total(self) -> bool:
        return all(c is not None for c in self.colours)

    @property
    def colour_count(self) -> int:
        return len({c for c in self.colours if c is not None})

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {e: c for e, c in zip(self.graph.edges, self.colours) if c is not None}

    def incident_colours(self, v: int) -> set[int]:
        g = self.graph
        return {c for c in (self.colours[g.edge_id(v, w)] for w in g.adj(v)) if c is not None}

    def with_colours(self, updates: Mapping[int | tuple[int, int], int | None]) -> "EdgeColouring":
        cols = list(self.colours)
        for e, c in updates.items():
            if isinstance(e, tuple):
                e = self.graph.edge_id(*e)
            cols[e] = c
        return EdgeColouring(self.graph, tuple(cols))

    def normalized(self) -> "EdgeColouring":
        """Relabel colours 1, 2, ... by first use in edge-id order."""
        relabel: dict[int, int] = {}
        out = []
        for c in self.colours:
            if c is not None and c not in relabel:
                relabel[c] = len(relabel) + 1
            out.append(None if c is None else relabel[c])
        return EdgeColouring(self.graph, tuple(out))

    # -- file formats ------------------------------------------------------------

    def to_lines(self) -> str:
        return "".join(f"{u} {v} {c}\n" for (u, v), c in zip(self.graph.edges, self.colours) if c is not None)

    @classmethod
    def from_lines(cls, g: Graph, text: str) -> "EdgeColouring":
        cols: list[int | None] = [None] * g.m
        for lineno, line in enumerate(text.splitlines(), start=1):
            parts = line.split()
            if not parts or parts[0].startswith("#"):
                continue
            if len(parts) != 3:
                raise FormatError("colouring line must be 'u v colour'", lineno)
            try:
                u, v, c = (int(p) for p in parts)
            except ValueError:
                raise FormatError("colouring fields must be integers", lineno) from None
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                raise FormatError(f"{u} {v} is not an edge of the host", lineno)
            if c < 1:
                raise FormatError("colour ids must be positive", lineno)
            e = g.edge_id(u, v)
            if cols[e] is not None:
                raise FormatError(f"edge {u} {v} coloured twice", lineno)
            cols[e] = c
        return cls(g, tuple(cols))

    def to_json(self) -> dict:
        return {"edges": [[u, v, c] for (u, v), c in zip(self.graph.edges, self.colours) if c is not None]}

    @classmethod
    def from_json(cls, g: Graph, data: Mapping) -> "EdgeColouring":
        return cls.from_mapping(g, {(int(u), int(v)): int(c) for u, v, c in data["edges"]})


# -- predicates ----------------------------------------------------------------


def _vertex_multiplicities(c: EdgeColouring) -> Iterator[Counter]:
    g = c.graph
    for v in range(g.n):
        yield Counter(c.colours[g.edge_id(v, w)] for w in g.adj(v) if c.colours[g.edge_id(v, w)] is not None)


def is_m_bounded(g: Graph, c: EdgeColouring, m: int) -> bool:
    """No colour appears more than ``m`` times at any vertex (uncoloured edges ignored)."""
    if c.graph != g:
        raise ValueError("colouring belongs to another graph")
    return all(max(cnt.values(), default=0) <= m for cnt in _vertex_multiplicities(c))


def is_proper(g: Graph, c: EdgeColouring) -> bool:
    return is_m_bounded(g, c, 1)


def colours_used(c: EdgeColouring) -> set[int]:
    return {x for x in c.colours if x is not None}


# -- canonical search engine ----------------------------------------------------------


class BudgetExceeded(Exception):
    pass


def heuristic_edge_order(g: Graph) -> list[int]:
    """Edges by descending degree sum of the endpoints, ties by edge id."""
    return sorted(range(g.m), key=lambda e: (-(g.degree(g.edges[e][0]) + g.degree(g.edges[e][1])), e))


class ColouringSearch:
    """Depth-first enumeration of colourings in first-use canonical form.

    Edges are coloured along ``order``; an edge may take any colour up to one
    more than the largest colour so far, which yields exactly one colouring
    per colour-permutation class.  Constraints: at most ``m`` edges of a
    colour at a vertex, at most ``palette`` colours.  With ``copies`` (tuples
    of edge ids) a branch dies as soon as one copy is fully coloured and
    rainbow.
    """

    def __init__(
        self,
        g: Graph,
        order: Sequence[int] | None = None,
        *,
        m: int = 1,
        palette: int | None = None,
        copies: Sequence[Sequence[int]] = (),
        max_nodes: int | None = None,
        max_seconds: float | None = None,
    ):
        self.g = g
        self.order = list(order) if order is not None else heuristic_edge_order(g)
        if sorted(self.order) != list(range(g.m)):
            raise ValueError("order must be a permutation of the edge ids")
        self.m = m
        self.cap = g.m if palette is None else min(palette, g.m)
        self.copies = [tuple(c) for c in copies]
        self.by_edge: list[list[int]] = [[] for _ in range(g.m)]
        for cid, cp in enumerate(self.copies):
            for e in cp:
                self.by_edge[e].append(cid)
        self.max_nodes = max_nodes
        self.max_seconds = max_seconds
        self.nodes = 0
        self.max_depth = 0
        self._deadline: float | None = None
        self.col = [0] * g.m
        self._filled = [0] * len(self.copies)
        self._size = [len(c) for c in self.copies]
        self._used = [0] * g.n  # bitmask of colours, m == 1
        self._count = [Counter() for _ in range(g.n)]  # m > 1

    def colouring(self) -> EdgeColouring:
        return EdgeColouring(self.g, tuple(c if c else None for c in self.col))

    def _tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded
        if self._deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self._deadline:
            raise BudgetExceeded

    def _assign(self, e: int, colour: int) -> bool:
        a, b = self.g.edges[e]
        self.col[e] = colour
        if self.m == 1:
            bit = 1 << colour
            self._used[a] |= bit
            self._used[b] |= bit
        else:
            self._count[a][colour] += 1
            self._count[b][colour] += 1
        conflict = False
        col = self.col
        for cid in self.by_edge[e]:
            self._filled[cid] += 1
            if self._filled[cid] == self._size[cid] and not conflict:
                cp = self.copies[cid]
                if len({col[x] for x in cp}) == len(cp):
                    conflict = True
        return not conflict

    def _unassign(self, e: int) -> None:
        a, b = self.g.edges[e]
        colour = self.col[e]
        if self.m == 1:
            mask = ~(1 << colour)
            self._used[a] &= mask
            self._used[b] &= mask
        else:
            self._count[a][colour] -= 1
            self._count[b][colour] -= 1
        for cid in self.by_edge[e]:
            self._filled[cid] -= 1
        self.col[e] = 0

    def _allowed(self, e: int, colour: int) -> bool:
        a, b = self.g.edges[e]
        if self.m == 1:
            return not ((self._used[a] | self._used[b]) >> colour) & 1
        return self._count[a][colour] < self.m and self._count[b][colour] < self.m

    def load_prefix(self, prefix: Sequence[int]) -> int:
        """Fix the first ``len(prefix)`` edges of the order; returns their max colour."""
        top = 0
        for pos, colour in enumerate(prefix):
            e = self.order[pos]
            if colour > top + 1 or colour > self.cap or not self._allowed(e, colour):
                raise ValueError("prefix is not a canonical valid assignment")
            if not self._assign(e, colour):
                raise ValueError("prefix already completes a rainbow copy")
            top = max(top, colour)
        return top

    def search(self, prefix: Sequence[int] = (), stop_depth: int | None = None) -> Iterator[int]:
        """Yield (the current depth) at every surviving node of depth ``stop_depth``.

        ``stop_depth`` defaults to the number of edges, i.e. total colourings.
        The live state (``col``) is valid only until the generator resumes.
        """
        if self.max_seconds is not None:
            self._deadline = time.monotonic() + self.max_seconds
        limit = self.g.m if stop_depth is None else stop_depth
        top = self.load_prefix(prefix)
        self.max_depth = max(self.max_depth, len(prefix))
        yield from self._dfs(len(prefix), top, limit)

    def _dfs(self, pos: int, top: int, limit: int) -> Iterator[int]:
        if pos == limit:
            yield pos
            return
        e = self.order[pos]
        upper = min(top + 1, self.cap)
        for colour in range(1, upper + 1):
            self._tick()
            if not self._allowed(e, colour):
                continue
            ok = self._assign(e, colour)
            if ok:
                if pos + 1 > self.max_depth:
                    self.max_depth = pos + 1
                yield from self._dfs(pos + 1, colour if colour > top else top, limit)
            self._unassign(e)


# -- enumeration, chromatic index, completion -------------------------------------------


def enumerate_proper_colourings(
    g: Graph, max_colours: int | None = None, order: Sequence[int] | None = None
) -> Iterator[EdgeColouring]:
    """One proper colouring per colour-permutation class, using at most ``max_colours`` colours."""
    search = ColouringSearch(g, order, palette=max_colours)
    for _ in search.search():
        yield search.colouring()


def enumerate_m_bounded_colourings(
    g: Graph, m: int, max_colours: int | None = None
) -> Iterator[EdgeColouring]:
    search = ColouringSearch(g, m=m, palette=max_colours)
    for _ in search.search():
        yield search.colouring()


def find_colouring(g: Graph, colours: int) -> EdgeColouring | None:
    """A proper colouring with at most ``colours`` colours, or None."""
    if g.m == 0:
        return EdgeColouring.empty(g)
    for c in enumerate_proper_colourings(g, colours):
        return c
    return None


def chromatic_index(g: Graph) -> int:
    """Exact chromatic index: Delta if a Delta-colouring exists, otherwise Delta + 1."""
    if g.m == 0:
        return 0
    delta = g.max_degree()
    if find_colouring(g, delta) is not None:
        return delta
    if find_colouring(g, delta + 1) is None:
        raise AssertionError("no (Delta+1)-edge-colouring found; contradicts Vizing's theorem")
    return delta + 1


def complete_to_proper(
    g: Graph,
    partial: EdgeColouring,
    *,
    max_colours: int | None = None,
    rng: random.Random | None = None,
) -> EdgeColouring | None:
    """Extend ``partial`` to a total proper colouring by backtracking, or None.

    Fresh colours are allowed unless ``max_colours`` caps the palette.  With
    ``rng`` the uncoloured edges and the candidate colours are tried in random
    order, giving a random completion.
    """
    if partial.graph != g:
        raise ValueError("colouring belongs to another graph")
    if not is_proper(g, partial):
        raise ValueError("partial colouring is not proper on its domain")
    cols = list(partial.colours)
    todo = [e for e in range(g.m) if cols[e] is None]
    if rng is not None:
        rng.shuffle(todo)
    else:
        todo.sort(key=lambda e: (-(g.degree(g.edges[e][0]) + g.degree(g.edges[e][1])), e))
    used: list[Counter] = [Counter() for _ in range(g.n)]
    for e, c in enumerate(cols):
        if c is not None:
            used[g.edges[e][0]][c] += 1
            used[g.edges[e][1]][c] += 1
    base = max((c for c in cols if c is not None), default=0)

    def extend(i: int, top: int) -> bool:
        if i == len(todo):
            return True
        e = todo[i]
        a, b = g.edges[e]
        limit = top + 1 if max_colours is None else max_colours
        cands = [c for c in range(1, limit + 1) if not used[a][c] and not used[b][c]]
        if rng is not None:
            rng.shuffle(cands)
        for c in cands:
            cols[e] = c
            used[a][c] += 1
            used[b][c] += 1
            if extend(i + 1, max(top, c)):
                return True
            used[a][c] -= 1
            used[b][c] -= 1
            cols[e] = None
        return False

    if not extend(0, base):
        return None
    return EdgeColouring(g, tuple(cols))


def random_proper_colouring(g: Graph, rng: random.Random, palette: int | None = None) -> EdgeColouring:
    """Random-order greedy proper colouring drawing uniformly from the free colours of ``1..palette``.

    The default palette ``2 Delta - 1`` always leaves a free colour.
    """
    if palette is None:
        palette = max(1, 2 * g.max_degree() - 1)
    return random_m_bounded_colouring(g, 1, rng, palette)


def random_m_bounded_colouring(g: Graph, m: int, rng: random.Random, palette: int | None = None) -> EdgeColouring:
    if palette is None:
        palette = max(1, 2 * ((g.max_degree() - 1) // m) + 1)
    order = list(range(g.m))
    rng.shuffle(order)
    count: list[Counter] = [Counter() for _ in range(g.n)]
    cols: list[int | None] = [None] * g.m
    for e in order:
        a, b = g.edges[e]
        free = [c for c in range(1, palette + 1) if count[a][c] < m and count[b][c] < m]
        if not free:
            free = [max([palette] + [c for c in cols if c is not None]) + 1]
        c = rng.choice(free)
        cols[e] = c
        count[a][c] += 1
        count[b][c] += 1
    return EdgeColouring(g, tuple(cols))


def colouring_from_pairs(g: Graph, pairs: Iterable[tuple[int, int, int]]) -> EdgeColouring:
    return EdgeColouring.from_mapping(g, {norm_edge(u, v): c for u, v, c in pairs})
