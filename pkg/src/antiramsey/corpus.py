"""Fixed test corpus of small hosts and patterns shared by the acceptance suite and the tests."""

from __future__ import annotations

from .constructions import class2_regular, gadget, named_graph
from .graph import Graph

HOST_NAMES = (
    "k3", "k4", "k5", "c4", "c5", "c6", "c7", "c8", "p4", "p5", "p6", "star_3", "star_4",
    "k23", "k24", "k33", "petersen", "prism", "bull", "chair", "triangle_pendant",
    "k4_subdivided", "nonmono", "2k2", "p3+k2", "k3+k2", "c4+k2",
)
GADGETS = ((3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1), (5, 2), (6, 1), (6, 2))

PATTERN_NAMES = ("k2", "p3", "p4", "p5", "k3", "c4", "c5", "2k2", "star_3", "chair", "p3+k2", "bull", "triangle_pendant")

CUBIC_NAMES = ("k4", "k33", "prism", "petersen")


def hosts() -> dict[str, Graph]:
    out = {name: named_graph(name) for name in HOST_NAMES}
    for k, d in GADGETS:
        out[f"gadget:{k},{d}"] = gadget(k, d)
    out["class2:2"] = class2_regular(2)
    return out


def small_hosts(max_edges: int) -> dict[str, Graph]:
    return {name: g for name, g in hosts().items() if g.m <= max_edges}


def oracle_instances(max_edges: int = 8) -> list[tuple[str, str]]:
    """(host, pattern) pairs with e(host) <= max_edges and the pattern no larger than the host."""
    out = []
    patterns = {name: named_graph(name) for name in PATTERN_NAMES}
    for hname, g in small_hosts(max_edges).items():
        for pname, h in patterns.items():
            if h.m <= g.m and h.n <= g.n:
                out.append((hname, pname))
    return out
