"""Constrained cut, bipartization, contraction and list (H,C,<=K)-coloring solvers."""

from .bipartization import (
    branches,
    exact_stable_bipartization,
    g_bipartization,
    oct,
    separation_sets,
    shortest_odd_cycle,
)
from .connected import connected_cut, connector_set, steiner_tree_bounded
from .cuts import edge_induced_vertex_cut, g_mincut, multicut_uncut, stable_cut
from .edge_bipartization import (
    EdgeEncoding,
    bipartite_contraction,
    edge_class_members,
    encode_edge_instance,
    g_edge_bipartization,
)
from .hck import (
    Coloring,
    HckDocument,
    HomTarget,
    hck_reduce_bipartite,
    hck_solve,
    hck_solve_bounded,
    verify_coloring,
)

__all__ = [
    "Coloring",
    "EdgeEncoding",
    "HckDocument",
    "HomTarget",
    "bipartite_contraction",
    "branches",
    "connected_cut",
    "connector_set",
    "edge_class_members",
    "edge_induced_vertex_cut",
    "encode_edge_instance",
    "exact_stable_bipartization",
    "g_bipartization",
    "g_edge_bipartization",
    "g_mincut",
    "hck_reduce_bipartite",
    "hck_solve",
    "hck_solve_bounded",
    "multicut_uncut",
    "oct",
    "separation_sets",
    "shortest_odd_cycle",
    "stable_cut",
    "steiner_tree_bounded",
    "verify_coloring",
]
