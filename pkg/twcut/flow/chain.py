"""
The chain of nested minimum s-t separators.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import networkx as nx
from loguru import logger

from ..errors import PreconditionError
from ..graph.colored import ColoredGraph, VertexSet
from .network import SplitNetwork


@dataclass(frozen=True)
class SeparatorChain:
    """
    Nested sets X_1 < ... < X_q whose boundaries are minimum separators.

    Every minimum s-t separator is contained in the union of the separators.

    Attributes:
        ell: Minimum separator size
        diffs: X_1, X_2 minus X_1, ..., X_q minus X_(q-1)
        separators: S_i = N(X_i), each of size ell
    """

    ell: int
    diffs: Tuple[VertexSet, ...]
    separators: Tuple[VertexSet, ...]

    @property
    def q(self) -> int:
        return len(self.separators)

    def sets(self) -> List[VertexSet]:
        """The cumulative sets X_1, ..., X_q."""
        result = []
        acc: List[int] = []
        for diff in self.diffs:
            acc.extend(diff)
            result.append(tuple(sorted(acc)))
        return result

    def union(self) -> VertexSet:
        return tuple(sorted({v for sep in self.separators for v in sep}))


def separator_chain(g: ColoredGraph, s: int, t: int) -> SeparatorChain:
    """
    Build the chain of minimum s-t separators from a maximum flow.

    The strongly connected components of the residual network are put in
    topological order C_1, ..., C_r with t1 in C_x and s2 in C_y. For
    x < i <= y the trailing union Y_i of C_i, ..., C_r has no residual arc
    leaving it, so X_i = {v : v1, v2 in Y_i} has a minimum separator as
    neighborhood. Taking i from y down to x + 1 gives increasing sets.

    Args:
        g: Graph
        s: Source vertex
        t: Sink vertex

    Returns:
        The separator chain

    Raises:
        PreconditionError: If s = t, s and t are adjacent, or disconnected
    """
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise PreconditionError("Source and sink must differ")
    if g.has_edge(s, t):
        raise PreconditionError(f"Vertices {s} and {t} are adjacent; no separator exists")
    network = SplitNetwork(g, s, t)
    ell = network.maximize()
    if ell == 0:
        raise PreconditionError(f"Vertices {s} and {t} are already disconnected")

    dag = nx.condensation(network.residual_digraph())
    mapping: Dict[int, int] = dag.graph["mapping"]
    order = list(nx.lexicographical_topological_sort(dag))
    position = {comp: i for i, comp in enumerate(order)}
    x = position[mapping[network.sink]]
    y = position[mapping[network.source]]
    assert x < y, "sink component must precede source component"

    halves = [0] * g.n
    members = dag.nodes
    sets: List[VertexSet] = []
    inside: List[int] = []

    def absorb(i: int) -> None:
        for node in members[order[i]]["members"]:
            v = node // 2
            halves[v] += 1
            if halves[v] == 2:
                inside.append(v)

    for i in range(len(order) - 1, y, -1):
        absorb(i)
    for i in range(y, x, -1):
        absorb(i)
        current = tuple(sorted(inside))
        if not sets or sets[-1] != current:
            sets.append(current)

    assert sets, "a positive flow always yields a chain"
    diffs: List[VertexSet] = []
    separators: List[VertexSet] = []
    previous: set = set()
    for xs in sets:
        separator = g.neighborhood(xs)
        assert len(separator) == ell, "chain separator has wrong size"
        diffs.append(tuple(sorted(set(xs) - previous)))
        separators.append(separator)
        previous = set(xs)
    logger.debug("separator chain {}->{}: ell={} q={}", s, t, ell, len(sets))
    return SeparatorChain(ell=ell, diffs=tuple(diffs), separators=tuple(separators))
