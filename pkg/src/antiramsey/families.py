"""Set families: fractional width, disjoint representatives, gadget families, Bollobás check."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Hashable, Iterable, Sequence

from .colouring import EdgeColouring, is_proper
from .constructions import cycle, gadget, gadget_layout
from .errors import PreconditionError
from .lp import solve_packing
from .rainbow import Embedding

Rational = Fraction


def vertex_elem(v: int) -> tuple[str, int]:
    return ("v", v)


def colour_elem(c: int) -> tuple[str, int]:
    return ("c", c)


def _freeze(x):
    return tuple(_freeze(y) for y in x) if isinstance(x, list) else x


def _thaw(x):
    return [_thaw(y) for y in x] if isinstance(x, tuple) else x


@dataclass(frozen=True)
class SetFamily:
    """Finite sets over a common universe, optionally partitioned into groups."""

    sets: tuple[frozenset, ...]
    universe: tuple[Hashable, ...]
    groups: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        uni = set(self.universe)
        for s in self.sets:
            if not s <= uni:
                raise ValueError(f"set {sorted(map(str, s))} leaves the universe")
        if self.groups is not None:
            flat = sorted(i for grp in self.groups for i in grp)
            if flat != list(range(len(self.sets))):
                raise ValueError("groups must partition the set list")

    @classmethod
    def of(cls, sets: Iterable[Iterable[Hashable]], groups: Sequence[Sequence[int]] | None = None) -> "SetFamily":
        frozen = tuple(frozenset(s) for s in sets)
        universe: list = []
        seen = set()
        for s in frozen:
            for x in sorted(s, key=repr):
                if x not in seen:
                    seen.add(x)
                    universe.append(x)
        return cls(frozen, tuple(universe), None if groups is None else tuple(tuple(g) for g in groups))

    def __len__(self) -> int:
        return len(self.sets)

    def sub_family(self, group_ids: Iterable[int]) -> "SetFamily":
        """Union of the chosen groups, as an ungrouped family."""
        if self.groups is None:
            raise ValueError("family has no groups")
        idx = [i for g in sorted(group_ids) for i in self.groups[g]]
        return SetFamily(tuple(self.sets[i] for i in idx), self.universe)

    def to_json(self) -> dict:
        out = {
            "universe": [_thaw(x) for x in self.universe],
            "sets": [[_thaw(x) for x in sorted(s, key=repr)] for s in self.sets],
        }
        if self.groups is not None:
            out["groups"] = [list(g) for g in self.groups]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "SetFamily":
        sets = tuple(frozenset(_freeze(x) for x in s) for s in data["sets"])
        if "universe" in data:
            universe = tuple(_freeze(x) for x in data["universe"])
        else:
            universe = cls.of(sets).universe
        groups = data.get("groups")
        return cls(sets, universe, None if groups is None else tuple(tuple(g) for g in groups))


# -- fractional width -----------------------------------------------------------------


@dataclass(frozen=True)
class WidthCertificate:
    value: Fraction
    weights: tuple[Fraction, ...]  # feasible covering weights, sum = value
    packing: tuple[Fraction, ...]  # feasible dual packing, sum = value


def intersection_matrix(f: SetFamily) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(len(a & b) for b in f.sets) for a in f.sets)


@lru_cache(maxsize=4096)
def _width_of_matrix(mat: tuple[tuple[int, ...], ...]) -> WidthCertificate:
    n = len(mat)
    # packing dual of the covering LP: max sum y  s.t.  M^T y <= 1
    transposed = [[mat[j][i] for j in range(n)] for i in range(n)]
    sol = solve_packing(transposed, [1] * n, [1] * n)
    weights, packing = sol.dual, sol.primal
    # optimality audit: both sides feasible with equal objective
    for i in range(n):
        if sum(mat[i][j] * weights[j] for j in range(n)) < 1:
            raise AssertionError("covering weights infeasible")
        if sum(mat[j][i] * packing[j] for j in range(n)) > 1:
            raise AssertionError("packing infeasible")
    if min(weights + packing, default=0) < 0 or sum(weights) != sum(packing) or sum(weights) != sol.value:
        raise AssertionError("duality gap in LP certificate")
    return WidthCertificate(sol.value, weights, packing)


def fractional_width_certificate(f: SetFamily) -> WidthCertificate:
    if not f.sets:
        raise ValueError("family must be non-empty")
    if any(not s for s in f.sets):
        raise ValueError("sets must be non-empty")
    return _width_of_matrix(intersection_matrix(f))


def fractional_width(f: SetFamily) -> Fraction:
    """min sum(lambda) subject to sum_E |E & F| lambda(E) >= 1 for every F, lambda >= 0."""
    return fractional_width_certificate(f).value


# -- gadget families -------------------------------------------------------------------------


def build_gadget_families(k: int, d: int, c: EdgeColouring) -> SetFamily:
    """Groups F_i = {E_{i,j}} on G_{2k,d} with E_{i,j} = {c(u_i v_ij), v_ij, c(v_ij u_{i+1})}.

    Set index ``(i - 1) * d + (j - 1)`` holds E_{i,j}.
    """
    g = gadget(2 * k, d)
    if c.graph != g or not c.is_total or not is_proper(g, c):
        raise PreconditionError("need a total proper colouring of G_{2k,d}")
    lay = gadget_layout(2 * k, d)
    sets = []
    for i in range(1, k + 1):
        for j in range(1, d + 1):
            v = lay.par(i, j)
            sets.append({colour_elem(c[(lay.hub(i), v)]), vertex_elem(v), colour_elem(c[(v, lay.next_hub(i))])})
    groups = [list(range((i - 1) * d, i * d)) for i in range(1, k + 1)]
    return SetFamily.of(sets, groups)


def width_criterion_report(k: int, d: int, c: EdgeColouring) -> dict[tuple[int, ...], Fraction]:
    """Fractional width of the union of F_i over every non-empty I (1-based tuples)."""
    fam = build_gadget_families(k, d, c)
    out = {}
    for size in range(1, k + 1):
        for sub in itertools.combinations(range(k), size):
            out[tuple(i + 1 for i in sub)] = fractional_width(fam.sub_family(sub))
    return out


def width_criterion_check(k: int, d: int, c: EdgeColouring) -> bool:
    """True iff w*(F_I) > |I| - 1 for every non-empty I, compared exactly."""
    return all(w > len(sub) - 1 for sub, w in width_criterion_report(k, d, c).items())


def disjoint_representatives(f: SetFamily) -> list[int] | None:
    """Indices (into ``f.sets``) of pairwise disjoint sets, one per group, or None.

    Groups are searched in order, sets within a group in definition order.
    """
    if f.groups is None:
        raise ValueError("family has no groups")
    chosen: list[int] = []
    taken: set = set()

    def extend(gi: int) -> bool:
        if gi == len(f.groups):
            return True
        for idx in f.groups[gi]:
            s = f.sets[idx]
            if taken.isdisjoint(s):
                chosen.append(idx)
                taken.update(s)
                if extend(gi + 1):
                    return True
                taken.difference_update(s)
                chosen.pop()
        return False

    return list(chosen) if extend(0) else None


def decode_cycle(k: int, d: int, reps: Sequence[int]) -> Embedding:
    """The cycle u_1 v_{1,j_1} u_2 ... u_k v_{k,j_k} u_1 picked out by representatives."""
    lay = gadget_layout(2 * k, d)
    phi = []
    for i, idx in enumerate(reps, start=1):
        j = idx - (i - 1) * d + 1
        if not 1 <= j <= d:
            raise ValueError("representative does not belong to its group")
        phi += [lay.hub(i), lay.par(i, j)]
    return Embedding(cycle(2 * k), gadget(2 * k, d), tuple(phi))


# -- Bollobás ------------------------------------------------------------------------------


@dataclass(frozen=True)
class BollobasReport:
    conditions_hold: bool
    n: int
    bound: int | None
    a: int | None
    b: int | None
    violations: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {"conditions_hold": self.conditions_hold, "n": self.n, "bound": self.bound,
                "a": self.a, "b": self.b, "violations": list(self.violations)}


def bollobas_check(pairs: Sequence[tuple[Iterable, Iterable]]) -> BollobasReport:
    """Check uniform sizes, A_i & B_i empty, A_i & B_j non-empty (i != j); then N <= C(a+b, a)."""
    fam = [(frozenset(a), frozenset(b)) for a, b in pairs]
    n = len(fam)
    problems = []
    a_sizes = {len(a) for a, _ in fam}
    b_sizes = {len(b) for _, b in fam}
    a = a_sizes.pop() if len(a_sizes) == 1 else None
    b = b_sizes.pop() if len(b_sizes) == 1 else None
    if n == 0:
        problems.append("empty family")
    if a is None or b is None:
        problems.append("(i) sizes not uniform")
    elif a < 1 or b < 1:
        problems.append("(i) sizes must be positive")
    for i, (ai, bi) in enumerate(fam):
        if ai & bi:
            problems.append(f"(ii) A_{i + 1} meets B_{i + 1}")
    for i, j in itertools.permutations(range(n), 2):
        if not fam[i][0] & fam[j][1]:
            problems.append(f"(iii) A_{i + 1} misses B_{j + 1}")
            break
    bound = math.comb(a + b, a) if a is not None and b is not None else None
    ok = not problems
    if ok and n > bound:  # type: ignore[operator]
        raise AssertionError(f"cross-intersecting family of size {n} exceeds C(a+b, a) = {bound}")
    return BollobasReport(ok, n, bound, a, b, tuple(problems))


def complement_family(a: int, b: int) -> list[tuple[frozenset, frozenset]]:
    """All a-subsets of {0..a+b-1} paired with their complements: the tight example."""
    ground = frozenset(range(a + b))
    return [(frozenset(s), ground - frozenset(s)) for s in itertools.combinations(range(a + b), a)]


def random_cross_intersecting(rng: random.Random, a: int, b: int, ground: int, tries: int = 200) -> list[tuple[frozenset, frozenset]]:
    """Greedy random family satisfying the three conditions over ``range(ground)``."""
    fam: list[tuple[frozenset, frozenset]] = []
    for _ in range(tries):
        pts = rng.sample(range(ground), a + b)
        A, B = frozenset(pts[:a]), frozenset(pts[a:])
        if all(A & bj and ai & B for ai, bj in fam):
            fam.append((A, B))
    return fam
