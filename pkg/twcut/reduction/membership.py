"""
Exact set of vertices lying on some minimal s-t separator of bounded size.
"""

from loguru import logger

from ..errors import PreconditionError, SeparatorBoundError
from ..graph.colored import ColoredGraph, VertexSet
from .cover import cover_minimal_separators


def separator_membership(g: ColoredGraph, s: int, t: int, k: int) -> VertexSet:
    """
    Vertices on some minimal s-t separator with at most k vertices.

    v qualifies iff g minus v has a set S of at most k - 1 vertices and
    neighbors v1, v2 of v such that S separates s from t but neither s from
    v1 nor t from v2. Each test is a multicut-uncut instance; only vertices
    of the separator cover are tested.

    Args:
        g: Graph
        s: Source vertex
        t: Sink vertex
        k: Size bound

    Returns:
        The exact union of the small minimal separators (empty if none)

    Raises:
        PreconditionError: If s = t
    """
    from ..classes import ALL_GRAPHS
    from ..solvers.cuts import multicut_uncut

    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise PreconditionError("Source and sink must differ")
    if k < 1 or g.has_edge(s, t):
        return ()
    try:
        candidates = cover_minimal_separators(g, s, t, k)
    except SeparatorBoundError:
        return ()
    result = []
    for v in candidates:
        rest = g.remove([v])
        local = {o: i for i, o in enumerate(rest.origin)}
        ls, lt = local[s], local[t]
        hit = False
        for v1 in g.neighbors(v):
            for v2 in g.neighbors(v):
                if v1 == v2:
                    continue
                solution = multicut_uncut(
                    rest,
                    [((ls,), (lt,))],
                    [((ls,), (local[v1],)), ((lt,), (local[v2],))],
                    k - 1,
                    ALL_GRAPHS,
                )
                if solution is not None:
                    hit = True
                    break
            if hit:
                break
        if hit:
            result.append(v)
    logger.debug("separator membership {}->{} k={}: {} of {} cover vertices", s, t, k, len(result), len(candidates))
    return tuple(result)
