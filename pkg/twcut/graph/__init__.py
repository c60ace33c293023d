"""Graph core: colored graphs, primitive predicates, canonical forms, torso, text I/O."""

from .canonical import CanonicalGraph, canonical_form, canonicalize
from .colored import SUBDIVISION, ColoredGraph, EdgeColor, VertexSet, edge_key, vertex_set
from .ops import bipartite_2coloring, contract_edges, is_separator
from .torso import torso

__all__ = [
    "SUBDIVISION",
    "CanonicalGraph",
    "ColoredGraph",
    "EdgeColor",
    "VertexSet",
    "bipartite_2coloring",
    "canonical_form",
    "canonicalize",
    "contract_edges",
    "edge_key",
    "is_separator",
    "torso",
    "vertex_set",
]
