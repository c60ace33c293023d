"""Tree decompositions: min-fill construction, validation, nice form, PACE .td I/O."""

from .nice import NiceDecomposition, NiceNode, NodeKind, make_nice
from .pace import format_td, parse_td
from .tree import TreeDecomposition, decompose, require_valid, validate, violation

__all__ = [
    "NiceDecomposition",
    "NiceNode",
    "NodeKind",
    "TreeDecomposition",
    "decompose",
    "format_td",
    "make_nice",
    "parse_td",
    "require_valid",
    "validate",
    "violation",
]
