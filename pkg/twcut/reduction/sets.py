"""
Separators between vertex sets: cover of all small minimal X-Y separators and
projection of terminal sets onto a separating set.
"""

from collections import deque
from typing import Iterable, Set, Tuple

from ..errors import PreconditionError, SeparatorBoundError
from ..flow.network import min_vertex_cut
from ..graph.colored import ColoredGraph, VertexSet, vertex_set
from ..graph.ops import is_separator
from .cover import cover_minimal_separators


def with_super_terminals(g: ColoredGraph, x: Iterable[int], y: Iterable[int]) -> Tuple[ColoredGraph, int, int]:
    """
    Extend g by a new source adjacent to X and a new sink adjacent to Y.

    Returns:
        (extended graph, source id n, sink id n + 1)
    """
    s, t = g.n, g.n + 1
    edges = g.edges() + [(s, v) for v in x] + [(t, v) for v in y]
    extended = ColoredGraph.from_edges(
        g.n + 2,
        [e for e in edges if e not in g.red],
        g.red_edges(),
        labels=list(g.labels) + [0, 0],
    )
    return extended, s, t


def cover_set_separators(g: ColoredGraph, x: Iterable[int], y: Iterable[int], k: int) -> VertexSet:
    """
    A set containing every minimal X-Y separator of size at most k.

    Vertices of X and Y may themselves be in such separators; a vertex in
    both X and Y lies on a path of length two between the super terminals
    and so belongs to every separator.

    Args:
        g: Graph
        x: First terminal set (nonempty)
        y: Second terminal set (nonempty)
        k: Size bound

    Returns:
        Cover as a VertexSet of g; empty if X and Y are already separated

    Raises:
        PreconditionError: If X or Y is empty
        SeparatorBoundError: If separating X and Y needs more than k vertices
    """
    xs = vertex_set(x, g.n)
    ys = vertex_set(y, g.n)
    if not xs or not ys:
        raise PreconditionError("Both terminal sets must be nonempty")
    extended, s, t = with_super_terminals(g, xs, ys)
    if min_vertex_cut(extended, s, t, k) is None:
        raise SeparatorBoundError(f"Separating the terminal sets needs more than {k} vertices")
    cover = cover_minimal_separators(extended, s, t, k)
    return tuple(v for v in cover if v < g.n)


def _attached(g: ColoredGraph, c: Set[int], sources: VertexSet) -> Set[int]:
    # vertices of C reachable from the sources by paths with no other C vertex
    found = {v for v in sources if v in c}
    seen = {v for v in sources if v not in c}
    queue = deque(sorted(seen))
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u in c:
                found.add(u)
            elif u not in seen:
                seen.add(u)
                queue.append(u)
    return found


def project_terminals(
    g: ColoredGraph, c: Iterable[int], x: Iterable[int], y: Iterable[int]
) -> Tuple[VertexSet, VertexSet]:
    """
    Project terminal sets onto a separating set C.

    A vertex v of C goes into X* when some path from v to X meets C only at
    v; in particular X and C intersect inside X*. Y* likewise.

    Args:
        g: Graph
        c: Set separating X and Y
        x: First terminal set
        y: Second terminal set

    Returns:
        (X*, Y*); they may intersect

    Raises:
        PreconditionError: If C does not separate X and Y
    """
    cs = set(vertex_set(c, g.n))
    xs = vertex_set(x, g.n)
    ys = vertex_set(y, g.n)
    if not is_separator(g, cs, xs, ys):
        raise PreconditionError("The given set does not separate the terminal sets")
    return tuple(sorted(_attached(g, cs, xs))), tuple(sorted(_attached(g, cs, ys)))
