"""Exhaustive decision of "every valid colouring of G has a rainbow H", with certificates."""

from __future__ import annotations

import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .colouring import BudgetExceeded, ColouringSearch, EdgeColouring, heuristic_edge_order, is_m_bounded
from .constructions import gadget, named_graph
from .graph import Graph
from .patterns import Pattern, pattern
from .rainbow import CopyIndex, find_rainbow_copy

FORCES = "forces"
WITNESS = "witness_found"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Mode:
    """Which colourings are quantified over: proper, m-bounded, or proper with at most q colours."""

    kind: str = "proper"
    value: int | None = None

    @classmethod
    def parse(cls, text: str) -> "Mode":
        text = text.strip().lower()
        if text == "proper":
            return cls()
        m = re.fullmatch(r"m\s*=\s*(\d+)", text)
        if m:
            return cls.m_bounded(int(m.group(1)))
        m = re.fullmatch(r"palette\s*=\s*(\d+)", text)
        if m:
            return cls.palette_limited(int(m.group(1)))
        raise ValueError(f"unknown mode {text!r}; expected proper, m=K or palette=Q")

    @classmethod
    def m_bounded(cls, m: int) -> "Mode":
        if m < 1:
            raise ValueError("m must be positive")
        return cls("proper") if m == 1 else cls("m_bounded", m)

    @classmethod
    def palette_limited(cls, q: int) -> "Mode":
        if q < 1:
            raise ValueError("palette size must be positive")
        return cls("palette_limited", q)

    @property
    def multiplicity(self) -> int:
        return self.value if self.kind == "m_bounded" else 1  # type: ignore[return-value]

    @property
    def palette(self) -> int | None:
        return self.value if self.kind == "palette_limited" else None

    def admits(self, g: Graph, c: EdgeColouring) -> bool:
        if not c.is_total or not is_m_bounded(g, c, self.multiplicity):
            return False
        return self.palette is None or c.colour_count <= self.palette

    def __str__(self) -> str:
        if self.kind == "m_bounded":
            return f"m={self.value}"
        if self.kind == "palette_limited":
            return f"palette={self.value}"
        return "proper"


PROPER = Mode()


@dataclass
class SearchStats:
    nodes: int = 0
    max_depth: int = 0
    wall_time: float = 0.0
    budget_nodes: int | None = None
    budget_seconds: float | None = None

    def as_dict(self, include_time: bool = False) -> dict:
        out = {"nodes": self.nodes, "max_depth": self.max_depth, "budget_nodes": self.budget_nodes}
        if include_time:
            out["wall_time"] = round(self.wall_time, 6)
            out["budget_seconds"] = self.budget_seconds
        return out


class InvalidWitness(AssertionError):
    pass


@dataclass
class ForcesCertificate:
    verdict: str
    host: Graph
    pattern: Pattern
    mode: Mode
    witness: EdgeColouring | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    def __post_init__(self):
        if self.verdict not in (FORCES, WITNESS, INCONCLUSIVE):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if (self.verdict == WITNESS) != (self.witness is not None):
            raise ValueError("a witness accompanies exactly the witness_found verdict")
        if self.witness is not None:
            if not self.mode.admits(self.host, self.witness):
                raise InvalidWitness(f"witness is not a valid {self.mode} colouring")
            if find_rainbow_copy(self.host, self.witness, self.pattern) is not None:
                raise InvalidWitness("witness contains a rainbow copy")

    @property
    def conclusive(self) -> bool:
        return self.verdict != INCONCLUSIVE

    @property
    def forces(self) -> bool:
        return self.verdict == FORCES

    def to_json(self, include_time: bool = False) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        out["stats"] = self.stats.as_dict(include_time)
        out["mode"] = str(self.mode)
        out["pattern"] = self.pattern.name
        out["host"] = {"n": self.host.n, "m": self.host.m}
        return out


class Inconclusive(RuntimeError):
    def __init__(self, certificate: ForcesCertificate):
        self.certificate = certificate
        super().__init__(f"search budget exhausted after {certificate.stats.nodes} nodes")


# -- search ---------------------------------------------------------------------------


def _sequential(search: ColouringSearch) -> tuple[list[int] | None, bool]:
    try:
        for _ in search.search():
            return list(search.col), False
    except BudgetExceeded:
        return None, True
    return None, False


def _branch(args) -> tuple[list[int] | None, int, int, bool]:
    g, order, m, palette, copies, prefix, max_nodes, max_seconds = args
    s = ColouringSearch(g, order, m=m, palette=palette, copies=copies, max_nodes=max_nodes, max_seconds=max_seconds)
    try:
        for _ in s.search(prefix):
            return list(s.col), s.nodes, s.max_depth, False
    except BudgetExceeded:
        return None, s.nodes, s.max_depth, True
    return None, s.nodes, s.max_depth, False


def _parallel(g, order, m, palette, copies, max_nodes, max_seconds, workers):
    """Split at a fixed depth, search the branches in a pool, merge as the sequential run would."""
    split = ColouringSearch(g, order, m=m, palette=palette, copies=copies, max_nodes=max_nodes, max_seconds=max_seconds)
    depth = min(g.m - 1, 1)
    frontier: list[tuple[list[int], int]] = []
    while True:
        probe = ColouringSearch(g, order, m=m, palette=palette, copies=copies)
        count = sum(1 for _ in probe.search(stop_depth=depth))
        if count >= 4 * workers or depth >= g.m - 1:
            break
        depth += 1
    try:
        for _ in split.search(stop_depth=depth):
            frontier.append(([split.col[e] for e in order[:depth]], split.nodes))
    except BudgetExceeded:
        return None, split.nodes, split.max_depth, True
    prefix_total = split.nodes
    jobs = [(g, order, m, palette, copies, prefix, max_nodes, max_seconds) for prefix, _ in frontier]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_branch, jobs))
    nodes = 0
    max_depth = split.max_depth
    for (prefix, before), (found, b_nodes, b_depth, hit) in zip(frontier, results):
        nodes += b_nodes
        max_depth = max(max_depth, b_depth)
        if hit:
            return None, before + nodes, max_depth, True
        if found is not None:
            total = before + nodes
            return found, total, max_depth, max_nodes is not None and total > max_nodes
    total = prefix_total + nodes
    return None, total, max_depth, max_nodes is not None and total > max_nodes


def forces(
    g: Graph,
    h: Pattern | str,
    mode: Mode | str = PROPER,
    *,
    max_nodes: int | None = None,
    max_seconds: float | None = None,
    workers: int = 1,
    restrict: bool = False,
) -> ForcesCertificate:
    """Decide whether every colouring of ``g`` admitted by ``mode`` contains a rainbow ``h``.

    Colours are assigned edge by edge in first-use canonical form; a branch
    is cut on a mode violation or when a copy of ``h`` becomes fully coloured
    and rainbow.  Surviving leaves are witnesses.  When a budget runs out the
    verdict is ``inconclusive``.  ``restrict`` first drops edges lying in no
    copy of ``h`` (verdict-preserving except under a palette cap, where it is
    ignored).
    """
    if isinstance(h, str):
        h = pattern(h)
    if isinstance(mode, str):
        mode = Mode.parse(mode)
    if h.e < 1:
        raise ValueError("pattern needs an edge")
    started = time.monotonic()
    index = CopyIndex(g, h)
    work = g
    kept = list(range(g.m))
    if restrict and mode.palette is None:
        kept = sorted(index.covered_edges())
        work = g.edge_subgraph(kept)
        index = CopyIndex(work, h)
    order = heuristic_edge_order(work)
    copies = index.copies
    if workers > 1 and work.m >= 2:
        found, nodes, depth, hit = _parallel(
            work, order, mode.multiplicity, mode.palette, copies, max_nodes, max_seconds, workers
        )
    else:
        search = ColouringSearch(
            work, order, m=mode.multiplicity, palette=mode.palette, copies=copies,
            max_nodes=max_nodes, max_seconds=max_seconds,
        )
        found, hit = _sequential(search)
        nodes, depth = search.nodes, search.max_depth
    stats = SearchStats(nodes, depth, time.monotonic() - started, max_nodes, max_seconds)
    if hit:
        return ForcesCertificate(INCONCLUSIVE, g, h, mode, None, stats)
    if found is None:
        return ForcesCertificate(FORCES, g, h, mode, None, stats)
    full: list[int | None] = [None] * g.m
    for new_id, old_id in enumerate(kept):
        full[old_id] = found[new_id]
    fresh = max(found, default=0)
    for e in range(g.m):
        if full[e] is None:
            fresh += 1
            full[e] = fresh
    witness = EdgeColouring(g, tuple(full))
    return ForcesCertificate(WITNESS, g, h, mode, witness, stats)


# -- drivers ------------------------------------------------------------------------------


def dk_scan(k: int, d_max: int, **budget) -> list[tuple[int, ForcesCertificate]]:
    """Forcing certificates for G_{k,d}, d = 1, 2, ..., stopping at the first forcing d."""
    if k < 3:
        raise ValueError("k must be at least 3")
    out = []
    cyc = pattern(f"c_{k}")
    for d in range(1, d_max + 1):
        cert = forces(gadget(k, d), cyc, PROPER, **budget)
        out.append((d, cert))
        if not cert.conclusive:
            raise Inconclusive(cert)
        if cert.forces:
            break
    return out


def smallest_forcing_multiplicity(k: int, d_max: int, **budget) -> int | None:
    """Least d <= d_max such that every proper colouring of G_{k,d} has a rainbow C_k."""
    scan = dk_scan(k, d_max, **budget)
    d, cert = scan[-1]
    return d if cert.forces else None


@dataclass(frozen=True)
class UpperCertificate:
    bound: int | None  # AR_d(h) <= bound when the host forces
    size_bound: int | None  # AR_s(h) <= e(host)
    certificate: ForcesCertificate

    def to_json(self) -> dict:
        return {"bound": self.bound, "size_bound": self.size_bound, "certificate": self.certificate.to_json()}


def ar_d_upper_certificate(h: Pattern | str, g: Graph, **budget) -> UpperCertificate:
    cert = forces(g, h, PROPER, **budget)
    if cert.forces:
        return UpperCertificate(g.max_degree(), g.m, cert)
    return UpperCertificate(None, None, cert)


FC_CHECKS = {
    "triangle_pendant_via_k4subdiv": ("k4_subdivided", "triangle_pendant"),
    "bull_via_k5": ("k5", "bull"),
    "bull_via_k4": ("k4", "bull"),
}


def fc_membership_check(name: str, **budget) -> ForcesCertificate:
    """Run one of the catalogued host/pattern pairs for graphs with AR_d = e - 1."""
    try:
        host, pat = FC_CHECKS[name]
    except KeyError:
        raise ValueError(f"unknown check {name!r}; known: {sorted(FC_CHECKS)}") from None
    return forces(named_graph(host), pattern(pat), PROPER, **budget)
