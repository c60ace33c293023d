"""Vertex-capacitated flows, minimum separators and the chain of minimum separators."""

from .chain import SeparatorChain, separator_chain
from .network import UNBOUNDED, SplitNetwork, min_vertex_cut

__all__ = ["UNBOUNDED", "SeparatorChain", "SplitNetwork", "min_vertex_cut", "separator_chain"]
