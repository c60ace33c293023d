"""
Primitive predicates and transformations on colored graphs.
"""

from collections import deque
from typing import Dict, Iterable, List, Optional, Set, Tuple

from ..errors import PreconditionError
from .colored import ColoredGraph, Edge, VertexSet, edge_key, vertex_set


def is_separator(
    g: ColoredGraph,
    s: Iterable[int],
    a: Iterable[int],
    b: Iterable[int],
) -> bool:
    """
    Check whether S separates A and B.

    S separates A and B when A and B share no vertex outside S and no
    component of g minus S meets both A minus S and B minus S.

    Args:
        g: Host graph
        s: Candidate separator
        a: First terminal set
        b: Second terminal set

    Returns:
        True if S separates A and B

    Raises:
        VertexRangeError: If an id is outside the graph
    """
    removed = set(vertex_set(s, g.n))
    side_a = set(vertex_set(a, g.n)) - removed
    side_b = set(vertex_set(b, g.n)) - removed
    if side_a & side_b:
        return False
    if not side_a or not side_b:
        return True
    seen = set(side_a)
    queue = deque(sorted(side_a))
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u in seen or u in removed:
                continue
            if u in side_b:
                return False
            seen.add(u)
            queue.append(u)
    return True


def bipartite_2coloring(
    g: ColoredGraph, include_red: bool = False
) -> Optional[Tuple[VertexSet, VertexSet]]:
    """
    Find a proper 2-coloring.

    BFS from the lowest-id vertex of every component, roots colored B'.
    Red edges are ignored unless ``include_red`` is set.

    Args:
        g: Graph to color
        include_red: Treat red edges as constraints too

    Returns:
        (B', W') or None if an odd cycle exists
    """
    adjacency = g.adjacency if include_red else g.black_adjacency
    side: List[int] = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in sorted(adjacency[v]):
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    black = tuple(v for v in range(g.n) if side[v] == 0)
    white = tuple(v for v in range(g.n) if side[v] == 1)
    return black, white


def is_proper_coloring(g: ColoredGraph, black: Iterable[int], white: Iterable[int]) -> bool:
    """Check that (black, white) partitions V(g) with no monochromatic edge."""
    side: Dict[int, int] = {}
    for v in black:
        side[v] = 0
    for v in white:
        if v in side:
            return False
        side[v] = 1
    if len(side) != g.n:
        return False
    return all(side[u] != side[v] for u, v in g.edges())


def contract_edges(g: ColoredGraph, f: Iterable[Edge]) -> ColoredGraph:
    """
    Contract an edge set (G/F).

    Merged classes are renumbered by their smallest original id. Loops and
    parallel edges are dropped; a merged edge is black if any of the edges
    it replaces was black. Labels and origins follow the smallest member.

    Args:
        g: Host graph
        f: Edges to contract

    Returns:
        The contracted simple graph

    Raises:
        PreconditionError: If an edge of F is not in g
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in f:
        g.check_vertex(u)
        g.check_vertex(v)
        if not g.has_edge(u, v):
            raise PreconditionError(f"Cannot contract ({u}, {v}): not an edge")
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    roots = sorted({find(v) for v in range(g.n)})
    index = {r: i for i, r in enumerate(roots)}
    black: Set[Edge] = set()
    red: Set[Edge] = set()
    for u, v in g.edges():
        cu, cv = index[find(u)], index[find(v)]
        if cu == cv:
            continue
        key = edge_key(cu, cv)
        if (u, v) in g.red:
            red.add(key)
        else:
            black.add(key)
    return ColoredGraph.from_edges(
        len(roots),
        sorted(black),
        sorted(red - black),
        labels=[g.labels[r] for r in roots],
        origin=roots,
    )
