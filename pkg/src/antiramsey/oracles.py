"""Deliberately naive reference implementations used to cross-check the search code.

Nothing here shares code with the optimized paths beyond the Graph container.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterator

from .graph import Graph


def injective_copies(g: Graph, h: Graph) -> set[frozenset[int]]:
    """Edge sets of all copies of ``h`` in ``g`` by trying every injective vertex map."""
    out = set()
    for phi in itertools.permutations(range(g.n), h.n):
        ids = []
        for u, v in h.edges:
            a, b = phi[u], phi[v]
            if not g.has_edge(a, b):
                break
            ids.append(g.edge_id(a, b))
        else:
            out.add(frozenset(ids))
    return out


def injective_map_count(g: Graph, h: Graph) -> int:
    count = 0
    for phi in itertools.permutations(range(g.n), h.n):
        if all(g.has_edge(phi[u], phi[v]) for u, v in h.edges):
            count += 1
    return count


def set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    """Every partition of ``items`` into non-empty blocks (restricted growth strings)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def partition_colourings(g: Graph, m: int = 1, palette: int | None = None) -> Iterator[tuple[int, ...]]:
    """All colourings up to renaming, as colour tuples, filtered by multiplicity and palette."""
    for part in set_partitions(list(range(g.m))):
        if palette is not None and len(part) > palette:
            continue
        ok = True
        for block in part:
            counts = Counter(v for e in block for v in g.edges[e])
            if counts and max(counts.values()) > m:
                ok = False
                break
        if not ok:
            continue
        cols = [0] * g.m
        for i, block in enumerate(part):
            for e in block:
                cols[e] = i + 1
        yield tuple(cols)


def brute_forces(g: Graph, h: Graph, m: int = 1, palette: int | None = None) -> bool:
    """True iff every admitted colouring has a rainbow copy of ``h``."""
    copies = injective_copies(g, h)
    for cols in partition_colourings(g, m, palette):
        if not any(len({cols[e] for e in cp}) == len(cp) for cp in copies):
            return False
    return True


def brute_has_rainbow(g: Graph, cols, h: Graph) -> bool:
    for phi in itertools.permutations(range(g.n), h.n):
        seen = []
        for u, v in h.edges:
            a, b = phi[u], phi[v]
            if not g.has_edge(a, b):
                break
            seen.append(cols[g.edge_id(a, b)])
        else:
            if len(set(seen)) == len(seen):
                return True
    return False


def brute_girth(g: Graph) -> float:
    """Shortest cycle by trying vertex sequences of increasing length."""
    for k in range(3, g.n + 1):
        for seq in itertools.permutations(range(g.n), k):
            if seq[0] != min(seq) or seq[1] > seq[-1]:
                continue
            if all(g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)):
                return k
    return float("inf")


def brute_chromatic_index(g: Graph) -> int:
    best = None
    for cols in partition_colourings(g):
        used = len(set(cols))
        best = used if best is None else min(best, used)
    return best or 0


def brute_degeneracy(g: Graph) -> int:
    """max over subgraphs of the minimum degree, over all vertex subsets."""
    best = 0
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            s = set(sub)
            best = max(best, min(len(g.adj(v) & s) for v in sub))
    return best


def brute_has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    for sub in itertools.combinations(range(g.m), g.n // 2):
        vs = [v for e in sub for v in g.edges[e]]
        if len(set(vs)) == g.n:
            return True
    return False


def brute_lp_cover(mat) -> "Fraction":
    """Covering LP min 1.x, M x >= 1, x >= 0 by enumerating basic solutions of the tight systems."""
    from fractions import Fraction

    n = len(mat)
    # constraints as rows a.x >= b: M rows, then identity (x >= 0)
    rows = [([Fraction(x) for x in r], Fraction(1)) for r in mat]
    rows += [([Fraction(int(i == j)) for j in range(n)], Fraction(0)) for i in range(n)]
    best = None
    for pick in itertools.combinations(range(len(rows)), n):
        a = [list(rows[i][0]) + [rows[i][1]] for i in pick]
        # Gauss-Jordan
        ok = True
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                ok = False
                break
            a[col], a[piv] = a[piv], a[col]
            p = a[col][col]
            a[col] = [x / p for x in a[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        if not ok:
            continue
        x = [a[i][n] for i in range(n)]
        if all(sum(r[j] * x[j] for j in range(n)) >= b for r, b in rows):
            val = sum(x)
            best = val if best is None else min(best, val)
    return best
