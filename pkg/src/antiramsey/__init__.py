"""Degree anti-Ramsey numbers at desk scale: constructions, exhaustive certificates, embeddings."""

from .certify import ForcesCertificate, Mode, forces
from .colouring import EdgeColouring, chromatic_index, is_m_bounded, is_proper
from .constructions import class2_regular, forest_host, gadget, named_graph
from .graph import FormatError, Graph
from .patterns import Pattern, ar_d_bounds, pattern

__all__ = [
    "ForcesCertificate", "Mode", "forces", "EdgeColouring", "chromatic_index", "is_m_bounded",
    "is_proper", "class2_regular", "forest_host", "gadget", "named_graph", "FormatError", "Graph",
    "Pattern", "ar_d_bounds", "pattern",
]
