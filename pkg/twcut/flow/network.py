"""
Vertex-capacitated s-t flow on the split network.

Every vertex v becomes two nodes v1 = 2v and v2 = 2v + 1 joined by a unit
arc v1 -> v2 and an unbounded arc v2 -> v1; every edge xy gives unbounded
arcs x2 -> y1 and y2 -> x1. Flow goes from s2 to t1, so the unit arcs
saturated by a maximum flow are exactly a minimum vertex separator.
"""

from collections import deque
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx
from loguru import logger

from ..errors import PreconditionError
from ..graph.colored import ColoredGraph, VertexSet


class _Unbounded:
    """Capacity marker of arcs without an upper bound."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNBOUNDED"


UNBOUNDED = _Unbounded()


class SplitNetwork:
    """
    Residual bookkeeping of the split network of one graph.

    Flow is stored as a skew-symmetric dict of net arc flows; arcs are
    scanned in increasing node id so augmenting paths are deterministic.
    """

    def __init__(self, g: ColoredGraph, s: int, t: int):
        self.g = g
        self.s = s
        self.t = t
        self.source = self.node_out(s)
        self.sink = self.node_in(t)
        self.flow: Dict[Tuple[int, int], int] = {}
        self.value = 0
        self._arcs: List[Tuple[int, ...]] = []
        for v in range(g.n):
            nbrs = g.sorted_neighbors[v]
            self._arcs.append(tuple(sorted((2 * v + 1,) + tuple(2 * x + 1 for x in nbrs))))
            self._arcs.append(tuple(sorted((2 * v,) + tuple(2 * x for x in nbrs))))

    @staticmethod
    def node_in(v: int) -> int:
        return 2 * v

    @staticmethod
    def node_out(v: int) -> int:
        return 2 * v + 1

    def capacity(self, u: int, w: int):
        """Arc capacity: 1, UNBOUNDED, or 0 when the arc does not exist."""
        if u % 2 == 0:
            return 1 if w == u + 1 else 0
        v = u // 2
        if w == u - 1 or (w % 2 == 0 and self.g.has_edge(v, w // 2)):
            return UNBOUNDED
        return 0

    def has_residual(self, u: int, w: int) -> bool:
        cap = self.capacity(u, w)
        if cap is UNBOUNDED:
            return True
        return cap - self.flow.get((u, w), 0) > 0

    def successors(self, u: int) -> List[int]:
        """Residual successors of node u in increasing id order."""
        return [w for w in self._arcs[u] if self.has_residual(u, w)]

    def augment(self) -> bool:
        """
        Push one unit along a shortest residual s2-t1 path.

        Returns:
            False if no augmenting path exists
        """
        parent = {self.source: self.source}
        queue = deque([self.source])
        while queue and self.sink not in parent:
            u = queue.popleft()
            for w in self._arcs[u]:
                if w in parent or not self.has_residual(u, w):
                    continue
                parent[w] = u
                if w == self.sink:
                    break
                queue.append(w)
        if self.sink not in parent:
            return False
        w = self.sink
        while w != self.source:
            u = parent[w]
            self.flow[(u, w)] = self.flow.get((u, w), 0) + 1
            self.flow[(w, u)] = self.flow.get((w, u), 0) - 1
            w = u
        self.value += 1
        return True

    def maximize(self, limit: Optional[int] = None) -> int:
        """
        Augment until no path remains or ``limit`` units flow.

        Args:
            limit: Stop after this many units (None for no limit)

        Returns:
            Flow value reached
        """
        while limit is None or self.value < limit:
            if not self.augment():
                break
        return self.value

    def reachable(self) -> Set[int]:
        """Nodes reachable from s2 in the residual network."""
        seen = {self.source}
        queue = deque([self.source])
        while queue:
            u = queue.popleft()
            for w in self.successors(u):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def min_separator(self) -> VertexSet:
        """Vertices whose unit arc leaves the residual source side."""
        side = self.reachable()
        return tuple(v for v in range(self.g.n) if 2 * v in side and 2 * v + 1 not in side)

    def residual_digraph(self) -> nx.DiGraph:
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(2 * self.g.n))
        digraph.add_edges_from((u, w) for u in range(2 * self.g.n) for w in self.successors(u))
        return digraph


def min_vertex_cut(g: ColoredGraph, s: int, t: int, k: int) -> Optional[Tuple[int, VertexSet]]:
    """
    Minimum s-t vertex separator of size at most k.

    Runs at most k + 1 augmentations; a (k+1)-th augmenting path proves the
    minimum separator is larger than k.

    Args:
        g: Graph
        s: Source vertex
        t: Sink vertex
        k: Size bound

    Returns:
        (size, separator) or None if s and t are adjacent or need more than
        k vertices; (0, ()) when s and t are disconnected

    Raises:
        PreconditionError: If s = t
    """
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise PreconditionError("Source and sink must differ")
    if g.has_edge(s, t):
        return None
    network = SplitNetwork(g, s, t)
    value = network.maximize(limit=k + 1)
    if value > k:
        logger.debug("min cut between {} and {} exceeds {}", s, t, k)
        return None
    return value, network.min_separator()
