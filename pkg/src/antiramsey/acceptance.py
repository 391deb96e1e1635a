"""Acceptance criteria 1-10 as callable checks with time limits, grouped into fast and full tiers."""

from __future__ import annotations

import math
import random
import time
from fractions import Fraction
from dataclasses import dataclass
from typing import Callable

from .certify import Mode, forces, smallest_forcing_multiplicity
from .colouring import (
    chromatic_index,
    complete_to_proper,
    enumerate_proper_colourings,
    is_m_bounded,
    is_proper,
    random_m_bounded_colouring,
    random_proper_colouring,
)
from .constructions import (
    class2_regular,
    complete,
    forest_host,
    gadget,
    lower_bound_partial_colouring,
    named_graph,
    z3_coloured_bipartite,
)
from .corpus import CUBIC_NAMES, hosts, oracle_instances
from .families import (
    bollobas_check,
    build_gadget_families,
    complement_family,
    decode_cycle,
    disjoint_representatives,
    random_cross_intersecting,
    width_criterion_report,
)
from .graph import girth, structural_report
from .matching import avoid_rainbow_c4_cubic, has_rainbow_c4, random_bridgeless_cubic
from .oracles import brute_forces, brute_has_rainbow, injective_copies
from .patterns import pattern
from .rainbow import find_rainbow_copy, greedy_bound, greedy_rainbow_embed, lemma31_embed

DEFAULT_SEED = 20240601


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    elapsed: float
    limit: float | None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lim = f" (limit {self.limit:g}s)" if self.limit else ""
        return f"[{status}] criterion {self.number}: {self.title} | {self.detail} | {self.elapsed:.2f}s{lim}"


class _Fail(Exception):
    pass


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise _Fail(msg)


def _timed(limit: float | None, t0: float, what: str) -> None:
    if limit is not None:
        _check(time.monotonic() - t0 < limit, f"{what} exceeded {limit:g}s")


# -- criteria ---------------------------------------------------------------------------------


def crit1_d_values(seed: int) -> str:
    t0 = time.monotonic()
    _check(smallest_forcing_multiplicity(3, 3) == 1, "d(3) != 1")
    _timed(10, t0, "d(3)")
    t0 = time.monotonic()
    _check(smallest_forcing_multiplicity(4, 4) == 2, "d(4) != 2")
    _timed(10, t0, "d(4)")
    c5 = pattern("c5")
    w = forces(gadget(5, 2), c5)
    _check(w.verdict == "witness_found", f"G_5,2 gave {w.verdict}")
    f = forces(gadget(5, 3), c5, max_seconds=600)
    _check(f.verdict == "forces", f"G_5,3 gave {f.verdict}")
    return f"d(3)=1, d(4)=2, d(5)=3 (G_5,3 exhausted in {f.stats.nodes} nodes)"


def crit2_c4(seed: int) -> str:
    t0 = time.monotonic()
    cert = forces(named_graph("k24"), pattern("c4"))
    _check(cert.forces, f"K_2,4 gave {cert.verdict}")
    _timed(10, t0, "K_2,4 search")
    t1 = time.monotonic()
    graphs = [named_graph(n) for n in CUBIC_NAMES]
    rng = random.Random(seed)
    graphs += [random_bridgeless_cubic(rng, 16) for _ in range(1000)]
    for g in graphs:
        c = avoid_rainbow_c4_cubic(g)
        _check(is_proper(g, c) and c.colour_count <= 4, "colouring not proper with <= 4 colours")
        _check(not has_rainbow_c4(g, c), "rainbow C4 found")
    _timed(120, t1, "cubic colourings")
    return f"K_2,4 forces ({cert.stats.nodes} nodes); {len(graphs)} cubic graphs coloured without rainbow C4"


def crit3_nonmono(seed: int) -> str:
    g = named_graph("nonmono")
    c4 = pattern("c4")
    _check(chromatic_index(g) == 4, "chromatic index != 4")
    t0 = time.monotonic()
    pal = forces(g, c4, Mode.palette_limited(4))
    _check(pal.forces, f"palette=4 gave {pal.verdict}")
    _timed(60, t0, "palette search")
    prop = forces(g, c4, Mode())
    _check(prop.verdict == "witness_found" and prop.witness is not None, f"proper gave {prop.verdict}")
    _check(find_rainbow_copy(g, prop.witness, c4) is None, "witness has a rainbow copy")
    return f"chi'=4; palette=4 forces ({pal.stats.nodes} nodes); proper witness revalidated"


def crit4_greedy(seed: int) -> str:
    t0 = time.monotonic()
    runs = 0
    for name in ("k2", "p4", "k3", "c4", "k4"):
        h = pattern(name)
        n = greedy_bound(h)
        kn = complete(n)
        for s in range(1000):
            c = random_proper_colouring(kn, random.Random(seed * 1000003 + s))
            greedy_rainbow_embed(n, c, h)
            runs += 1
    for name in ("k3", "p4"):
        h = pattern(name)
        n = greedy_bound(h, 2)
        kn = complete(n)
        for s in range(1000):
            c = random_m_bounded_colouring(kn, 2, random.Random(seed * 7919 + s))
            _check(is_m_bounded(kn, c, 2), "sampled colouring not 2-bounded")
            greedy_rainbow_embed(n, c, h, 2)
            runs += 1
    _timed(60, t0, "greedy embeddings")
    return f"{runs} greedy embeddings, zero failures"


def _gadget_sdr_ok(k: int, d: int, c) -> bool:
    report = width_criterion_report(k, d, c)
    if any(w < Fraction(d * len(sub), 2 * k + 1) or w <= len(sub) - 1 for sub, w in report.items()):
        return False
    reps = disjoint_representatives(build_gadget_families(k, d, c))
    if reps is None:
        return False
    emb = decode_cycle(k, d, reps)
    return emb.is_valid() and emb.is_rainbow(c)


def crit5_width(seed: int) -> str:
    g = gadget(4, 3)
    count = 0
    for c in enumerate_proper_colourings(g):
        _check(_gadget_sdr_ok(2, 3, c), f"colouring {c.colours} fails")
        count += 1
    g6 = gadget(6, 5)
    rng = random.Random(seed)
    for _ in range(100):
        c = random_proper_colouring(g6, rng)
        _check(_gadget_sdr_ok(3, 5, c), f"colouring {c.colours} of G_6,5 fails")
    return f"all {count} canonical colourings of G_4,3 and 100 of G_6,5 pass"


def crit6_forests(seed: int) -> str:
    t0 = time.monotonic()
    c5 = named_graph("c5")
    p4 = pattern("p4")
    count = 0
    for c in enumerate_proper_colourings(c5):
        _check(find_rainbow_copy(c5, c, p4) is not None, "colouring of C5 without rainbow P4")
        count += 1
    _timed(1, t0, "C5 exhaustion")
    g = class2_regular(3)
    rep = structural_report(g)
    _check(rep.is_regular_of == 3 and rep.connected, "not connected 3-regular")
    _check(girth(g) == 5, "girth != 5")
    _check(bool(rep.cut_vertices), "no cut vertex")
    _check(chromatic_index(g) == 4, "chromatic index != 4")
    rng = random.Random(seed)
    for tree in (pattern("p5"), pattern("chair")):
        for _ in range(100):
            c = random_proper_colouring(g, rng)
            emb = lemma31_embed(g, c, tree)
            _check(emb.is_valid() and emb.is_rainbow(c), "tree embedding not rainbow")
    return f"C5: {count} canonical colourings all rainbow P4; class2_regular(3) verified; 200 tree embeddings"


def crit6_stretch(seed: int) -> str:
    host = forest_host(named_graph("p3+k2"))
    cert = forces(host, pattern("p3+k2"), max_seconds=3600)
    _check(cert.forces, f"4xC5 gave {cert.verdict}")
    return f"forces(4xC5, P3+K2) in {cert.stats.nodes} nodes"


def crit7_bollobas(seed: int) -> str:
    tight = 0
    for a in range(1, 8):
        for b in range(1, 9 - a):
            rep = bollobas_check(complement_family(a, b))
            _check(rep.conditions_hold and rep.n == rep.bound == math.comb(a + b, a), f"a={a}, b={b} not tight")
            tight += 1
    rng = random.Random(seed)
    largest = 0
    for _ in range(10000):
        a, b = rng.randint(1, 4), rng.randint(1, 4)
        fam = random_cross_intersecting(rng, a, b, a + b + rng.randint(0, 3), tries=30)
        rep = bollobas_check(fam)
        _check(rep.conditions_hold, "generator produced an invalid family")
        largest = max(largest, rep.n / rep.bound)
    return f"{tight} tight complement families; 10^4 random families, max N/bound = {largest:.3f}"


def crit8_lower_bound(seed: int) -> str:
    g, partial = lower_bound_partial_colouring(2)
    c = complete_to_proper(g, partial)
    _check(c is not None and c.is_total and is_proper(g, c), "no proper completion")
    copies = injective_copies_cycle(g, 8)
    for cp in copies:
        _check(len({c.colours[e] for e in cp}) < 8, "rainbow C8 found")
    _check(find_rainbow_copy(g, c, pattern("c8")) is None, "rainbow C8 found by search")
    return f"completion proper, none of {len(copies)} C8 copies rainbow"


def injective_copies_cycle(g, k: int) -> set[frozenset[int]]:
    """All k-cycles of ``g`` as edge sets, by walking from the smallest vertex."""
    out = set()

    def walk(path: list[int]) -> None:
        if len(path) == k:
            if g.has_edge(path[-1], path[0]):
                ids = [g.edge_id(path[i], path[(i + 1) % k]) for i in range(k)]
                out.add(frozenset(ids))
            return
        for w in g.adj(path[-1]):
            if w > path[0] and w not in path:
                walk(path + [w])

    for s in range(g.n):
        walk([s])
    return out


def crit9_z3(seed: int) -> str:
    g, c = z3_coloured_bipartite(1)
    _check(is_proper(g, c), "r=1 not proper")
    _check(not brute_has_rainbow(g, c.colours, named_graph("c4")), "r=1 rainbow K_2,2")
    g2, c2 = z3_coloured_bipartite(2)
    _check(is_proper(g2, c2), "r=2 not proper")
    rng = random.Random(seed)
    side = 9
    for _ in range(10000):
        if rng.random() < 0.5:
            two, four = rng.sample(range(side), 2), [side + x for x in rng.sample(range(side), 4)]
        else:
            two, four = [side + x for x in rng.sample(range(side), 2)], rng.sample(range(side), 4)
        cols = [c2[(a, b)] for a in two for b in four]
        _check(len(set(cols)) < 8, "rainbow K_2,4")
    return "r=1 exhaustive, r=2 10^4 sampled K_2,4 copies, no rainbow"


def crit10_oracles(seed: int) -> str:
    graphs = hosts()
    inst = oracle_instances(8)
    _check(len(inst) >= 20, "fewer than 20 oracle instances")
    for hname, pname in inst:
        g, h = graphs[hname], named_graph(pname)
        _check(forces(g, pattern(pname)).forces == brute_forces(g, h), f"forces disagrees on {hname}/{pname}")
    rng = random.Random(seed)
    pairs = 0
    for hname, g in graphs.items():
        if g.n > 12:
            continue
        for pname in ("p3", "k3", "c4", "p4", "2k2", "chair", "c5", "bull", "p5"):
            h = named_graph(pname)
            if h.n > 6 or h.n > g.n:
                continue
            copies = injective_copies(g, h)
            for _ in range(3):
                c = random_proper_colouring(g, rng)
                fast = find_rainbow_copy(g, c, h) is not None
                slow = any(len({c.colours[e] for e in cp}) == len(cp) for cp in copies)
                _check(fast == slow, f"find_rainbow_copy disagrees on {hname}/{pname}")
                pairs += 1
    return f"{len(inst)} forces instances and {pairs} rainbow-copy checks agree"


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    run: Callable[[int], str]
    limit: float | None
    tiers: tuple[str, ...] = ("fast", "full")


CRITERIA = (
    Criterion(1, "d-values", crit1_d_values, 620),
    Criterion(2, "AR_d(C4) = 4", crit2_c4, 130),
    Criterion(3, "non-monotonicity gadget", crit3_nonmono, 60),
    Criterion(4, "greedy embedding in K_n", crit4_greedy, 60),
    Criterion(5, "fractional-width criterion", crit5_width, None),
    Criterion(6, "forests", crit6_forests, None),
    Criterion(6, "forests stretch: 4xC5 forces P3+K2", crit6_stretch, 3600, ("full",)),
    Criterion(7, "Bollobas bound", crit7_bollobas, None),
    Criterion(8, "explicit lower-bound colouring", crit8_lower_bound, 60),
    Criterion(9, "Z_3 construction", crit9_z3, None),
    Criterion(10, "oracle equivalence", crit10_oracles, None),
)


def run_criterion(crit: Criterion, seed: int = DEFAULT_SEED) -> CriterionResult:
    t0 = time.monotonic()
    try:
        detail = crit.run(seed)
        passed = True
    except _Fail as exc:
        detail, passed = str(exc), False
    except Exception as exc:  # a proof step or precondition blew up
        detail, passed = f"{type(exc).__name__}: {exc}", False
    elapsed = time.monotonic() - t0
    if passed and crit.limit is not None and elapsed > crit.limit:
        passed, detail = False, f"{detail}; exceeded {crit.limit:g}s"
    return CriterionResult(crit.number, crit.title, passed, detail, elapsed, crit.limit)


def run_suite(tier: str = "fast", seed: int = DEFAULT_SEED, only: set[int] | None = None, echo=None) -> list[CriterionResult]:
    if tier not in ("fast", "full"):
        raise ValueError("tier must be fast or full")
    out = []
    for crit in CRITERIA:
        if tier not in crit.tiers or (only and crit.number not in only):
            continue
        res = run_criterion(crit, seed)
        if echo:
            echo(res.line())
        out.append(res)
    return out
