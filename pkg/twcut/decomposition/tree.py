"""
Tree decompositions: min-fill construction and validation.
"""

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from loguru import logger

from ..errors import DecompositionError
from ..graph.colored import ColoredGraph


@dataclass(frozen=True)
class TreeDecomposition:
    """
    Bags over a tree.

    Attributes:
        bags: Vertex set of every tree node
        edges: Tree edges between bag indices
    """

    bags: Tuple[FrozenSet[int], ...]
    edges: Tuple[Tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def neighbors(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in self.bags]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for row in adj:
            row.sort()
        return adj


def _fill_in(adj: Dict[int, Set[int]], v: int) -> int:
    nbrs = sorted(adj[v])
    missing = 0
    for i, a in enumerate(nbrs):
        row = adj[a]
        for b in nbrs[i + 1:]:
            if b not in row:
                missing += 1
    return missing


def elimination_order(g: ColoredGraph) -> List[int]:
    """
    Min-fill elimination ordering, ties broken by lowest vertex id.

    Returns:
        Vertices in elimination order
    """
    adj: Dict[int, Set[int]] = {v: set(g.adjacency[v]) for v in range(g.n)}
    fill = {v: _fill_in(adj, v) for v in range(g.n)}
    heap = [(f, v) for v, f in fill.items()]
    heapq.heapify(heap)
    order: List[int] = []
    while heap:
        f, v = heapq.heappop(heap)
        if v not in adj or fill[v] != f:
            continue
        nbrs = adj.pop(v)
        del fill[v]
        order.append(v)
        for a in nbrs:
            adj[a].discard(v)
            adj[a].update(nbrs - {a})
        touched = set(nbrs)
        for a in nbrs:
            touched.update(adj[a])
        for u in touched:
            updated = _fill_in(adj, u)
            if updated != fill[u]:
                fill[u] = updated
                heapq.heappush(heap, (updated, u))
    return order


def decompose(g: ColoredGraph) -> TreeDecomposition:
    """
    Tree decomposition from the min-fill elimination ordering.

    The bag of v is v plus its neighbors at elimination time; it hangs below
    the bag of the earliest-eliminated of those neighbors. Components are
    chained through their last bags.

    Args:
        g: Graph

    Returns:
        Valid decomposition, one bag per vertex (one empty bag if g is empty)
    """
    if g.n == 0:
        return TreeDecomposition(bags=(frozenset(),), edges=())
    order = elimination_order(g)
    position = {v: i for i, v in enumerate(order)}
    adj: Dict[int, Set[int]] = {v: set(g.adjacency[v]) for v in range(g.n)}
    bags: List[FrozenSet[int]] = []
    later: List[Set[int]] = []
    for v in order:
        nbrs = adj.pop(v)
        for a in nbrs:
            adj[a].discard(v)
            adj[a].update(nbrs - {a})
        bags.append(frozenset(nbrs | {v}))
        later.append(nbrs)
    edges = []
    for i, nbrs in enumerate(later):
        if nbrs:
            edges.append((i, min(position[a] for a in nbrs)))
        elif i + 1 < len(order):
            edges.append((i, i + 1))
    td = TreeDecomposition(bags=tuple(bags), edges=tuple(edges))
    logger.debug("min-fill decomposition of {} vertices: width {}", g.n, td.width)
    return td


def violation(g: ColoredGraph, td: TreeDecomposition) -> Optional[str]:
    """
    Name the first violated tree decomposition condition.

    Returns:
        None for a valid decomposition, else a message naming the condition
    """
    count = len(td.bags)
    if count == 0:
        return "tree: decomposition has no bags"
    if len(td.edges) != count - 1:
        return f"tree: {count} bags need {count - 1} edges, found {len(td.edges)}"
    adj = td.neighbors()
    for i, j in td.edges:
        if not (0 <= i < count and 0 <= j < count):
            return f"tree: edge ({i}, {j}) refers to a missing bag"
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    if len(seen) != count:
        return "tree: bag graph is not connected"

    holders: Dict[int, List[int]] = {v: [] for v in range(g.n)}
    for i, bag in enumerate(td.bags):
        for v in bag:
            if v not in holders:
                return f"vertex coverage: bag {i} contains unknown vertex {v}"
            holders[v].append(i)
    for v, where in holders.items():
        if not where:
            return f"vertex coverage: vertex {v} is in no bag"
    for u, v in g.edges():
        if not set(holders[u]) & set(holders[v]):
            return f"edge coverage: edge ({u}, {v}) is in no bag"
    for v, where in holders.items():
        inside = set(where)
        reached = {where[0]}
        queue = deque([where[0]])
        while queue:
            i = queue.popleft()
            for j in adj[i]:
                if j in inside and j not in reached:
                    reached.add(j)
                    queue.append(j)
        if len(reached) != len(inside):
            return f"connectivity: bags containing vertex {v} are not connected"
    return None


def validate(g: ColoredGraph, td: TreeDecomposition) -> bool:
    """Check the vertex coverage, edge coverage and connectivity conditions."""
    return violation(g, td) is None


def require_valid(g: ColoredGraph, td: TreeDecomposition) -> None:
    """
    Raises:
        DecompositionError: Naming the violated condition
    """
    problem = violation(g, td)
    if problem is not None:
        raise DecompositionError(f"Invalid tree decomposition ({problem})")
