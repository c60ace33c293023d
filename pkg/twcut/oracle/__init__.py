"""Brute-force reference solvers used by the property tests and the ``verify`` command."""

from .brute import (
    brute_bipartization,
    brute_constrained_cut,
    brute_contraction,
    brute_edge_bipartization,
    brute_hck,
    brute_hck_colorings,
    brute_min_cut,
    brute_minimal_separator_union,
    brute_steiner_tree,
    minimal_exceptional_sets,
)

__all__ = [
    "brute_bipartization",
    "brute_constrained_cut",
    "brute_contraction",
    "brute_edge_bipartization",
    "brute_hck",
    "brute_hck_colorings",
    "brute_min_cut",
    "brute_minimal_separator_union",
    "brute_steiner_tree",
    "minimal_exceptional_sets",
]
