"""Constrained separator dynamic programming over nice tree decompositions."""

from .constraints import ConstraintKind, ConstraintSpec
from .demand import SeparationDemand
from .engine import DpState, solve

__all__ = ["ConstraintKind", "ConstraintSpec", "DpState", "SeparationDemand", "solve"]
