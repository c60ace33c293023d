"""Treewidth reduction: separator covers, the reduced graph G*, set separators."""

from .cover import LayerContext, contract_layer, cover_minimal_separators, layers
from .membership import separator_membership
from .sets import cover_set_separators, project_terminals
from .terminals import ReductionResult, reduce_terminals

__all__ = [
    "LayerContext",
    "ReductionResult",
    "contract_layer",
    "cover_minimal_separators",
    "cover_set_separators",
    "layers",
    "project_terminals",
    "reduce_terminals",
    "separator_membership",
]
