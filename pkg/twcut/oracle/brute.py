"""
Exhaustive reference solvers.

Every function enumerates candidates in order of size and then
lexicographically, so the first hit is the minimum-size, lexicographically
smallest answer. Instances above the configured caps are refused.
"""

from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from ..classes import ALL_GRAPHS, GraphClass
from ..config import get_settings
from ..dp.constraints import ConstraintKind, ConstraintSpec
from ..dp.demand import SeparationDemand
from ..errors import OracleLimitError, PreconditionError
from ..graph.canonical import canonicalize
from ..graph.colored import ColoredGraph, Edge, VertexSet, vertex_set
from ..graph.ops import contract_edges, is_separator
from ..solvers.hck import Coloring, HomTarget, Lists


def _check_vertices(g: ColoredGraph) -> None:
    cap = get_settings().oracle_max_vertices
    if g.n > cap:
        raise OracleLimitError(f"Oracle refuses {g.n} vertices (cap {cap}, TWCUT_ORACLE_MAX_VERTICES)")


def _check_edges(g: ColoredGraph) -> None:
    _check_vertices(g)
    cap = get_settings().oracle_max_edges
    if g.m > cap:
        raise OracleLimitError(f"Oracle refuses {g.m} edges (cap {cap}, TWCUT_ORACLE_MAX_EDGES)")


def _subsets(pool: Sequence[int], k: int, exact: bool = False) -> Iterator[VertexSet]:
    sizes = [k] if exact else range(min(k, len(pool)) + 1)
    for size in sizes:
        yield from combinations(pool, size)


def _check_terminals(g: ColoredGraph, s: int, t: int) -> None:
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise PreconditionError("Source and sink must differ")


def brute_constrained_cut(
    g: ColoredGraph,
    demand: SeparationDemand,
    k: int,
    spec: ConstraintSpec,
    forbidden: Iterable[int] = (),
) -> Optional[VertexSet]:
    """Same contract as the separator DP, by enumeration of all sets of at most k vertices."""
    _check_vertices(g)
    demand.check(g)
    blocked = set(vertex_set(forbidden, g.n))
    pool = [v for v in range(g.n) if v not in blocked]
    for s in _subsets(pool, k):
        if not demand.satisfied_by(g, s):
            continue
        black = canonicalize(g, s, include_red=False)
        if spec.kind == ConstraintKind.CONNECTED_BLACK and black.components() > 1:
            continue
        if spec.admits(black):
            return s
    return None


def brute_min_cut(g: ColoredGraph, s: int, t: int, k: Optional[int] = None) -> Optional[VertexSet]:
    """Smallest s-t separator (of at most k vertices when k is given)."""
    _check_vertices(g)
    _check_terminals(g, s, t)
    if g.has_edge(s, t):
        return None
    pool = [v for v in range(g.n) if v not in (s, t)]
    for sep in _subsets(pool, len(pool) if k is None else k):
        if is_separator(g, sep, (s,), (t,)):
            return sep
    return None


def _is_minimal_separator(g: ColoredGraph, sep: VertexSet, s: int, t: int) -> bool:
    if not is_separator(g, sep, (s,), (t,)):
        return False
    return all(not is_separator(g, [u for u in sep if u != v], (s,), (t,)) for v in sep)


def brute_minimal_separator_union(g: ColoredGraph, s: int, t: int, k: int) -> VertexSet:
    """Union of all inclusion-minimal s-t separators with at most k vertices."""
    _check_vertices(g)
    _check_terminals(g, s, t)
    if g.has_edge(s, t):
        return ()
    pool = [v for v in range(g.n) if v not in (s, t)]
    union: Set[int] = set()
    for sep in _subsets(pool, k):
        if _is_minimal_separator(g, sep, s, t):
            union.update(sep)
    return tuple(sorted(union))


def brute_steiner_tree(g: ColoredGraph, x: Iterable[int], k: Optional[int] = None) -> Optional[VertexSet]:
    """Smallest connected vertex set containing X (at most k vertices when k is given)."""
    _check_vertices(g)
    terms = vertex_set(x, g.n)
    if not terms:
        return ()
    limit = g.n if k is None else k
    if limit < len(terms):
        return None
    pool = [v for v in range(g.n) if v not in terms]
    for extra in _subsets(pool, limit - len(terms)):
        chosen = tuple(sorted(terms + extra))
        if len(g.induced(chosen).components()) == 1:
            return chosen
    return None


def brute_bipartization(
    g: ColoredGraph,
    k: int,
    graph_class: GraphClass = ALL_GRAPHS,
    exact: bool = False,
) -> Optional[VertexSet]:
    """
    Smallest S with g minus S bipartite and G[S] in the class.

    Args:
        exact: Only sets of exactly k vertices qualify
    """
    _check_vertices(g)
    for s in _subsets(list(range(g.n)), k, exact):
        if g.remove(s).is_bipartite() and graph_class.contains(canonicalize(g, s, include_red=False)):
            return s
    return None


def _edge_graph(edges: Sequence[Edge]) -> ColoredGraph:
    ends = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(ends)}
    return ColoredGraph.from_edges(len(ends), [(index[u], index[v]) for u, v in edges])


def brute_edge_bipartization(g: ColoredGraph, k: int, graph_class: GraphClass = ALL_GRAPHS) -> Optional[List[Edge]]:
    """Smallest edge set F, the graph formed by F in the class, g minus F bipartite."""
    _check_edges(g)
    edges = g.edges()
    for size in range(min(k, len(edges)) + 1):
        for f in combinations(edges, size):
            removed = set(f)
            rest = ColoredGraph.from_edges(g.n, [e for e in edges if e not in removed])
            if rest.is_bipartite() and graph_class.contains(canonicalize(_edge_graph(f))):
                return list(f)
    return None


def brute_contraction(g: ColoredGraph, k: int) -> Optional[List[Edge]]:
    """Smallest edge set whose contraction leaves g bipartite."""
    _check_edges(g)
    edges = g.edges()
    for size in range(min(k, len(edges)) + 1):
        for f in combinations(edges, size):
            if contract_edges(g, f).is_bipartite():
                return list(f)
    return None


def brute_hck_colorings(g: ColoredGraph, target: HomTarget, lists: Lists) -> Iterator[Coloring]:
    """Every list (H, C, <=K)-coloring, in lexicographic order of the assignment."""
    _check_vertices(g)
    if len(lists) != g.n:
        raise PreconditionError(f"Expected {g.n} lists, got {len(lists)}")
    counts = [0] * len(target.names)
    assignment: List[int] = []

    def extend(v: int) -> Iterator[Coloring]:
        if v == g.n:
            yield Coloring(tuple(assignment))
            return
        for c in sorted(lists[v]):
            if c in target.constrained and counts[c] >= target.caps[c]:
                continue
            if any(u < v and not target.compatible(c, assignment[u]) for u in g.adjacency[v]):
                continue
            assignment.append(c)
            counts[c] += 1
            yield from extend(v + 1)
            counts[c] -= 1
            assignment.pop()

    yield from extend(0)


def brute_hck(g: ColoredGraph, target: HomTarget, lists: Lists) -> Optional[Coloring]:
    """Lexicographically least coloring, or None."""
    return next(brute_hck_colorings(g, target, lists), None)


def minimal_exceptional_sets(g: ColoredGraph, target: HomTarget, lists: Lists) -> List[VertexSet]:
    """Exceptional sets of the minimal colorings: those with no coloring whose exceptional set is a proper subset."""
    found: Set[Tuple[int, ...]] = {c.exceptional(target) for c in brute_hck_colorings(g, target, lists)}
    minimal = [s for s in found if not any(set(o) < set(s) for o in found)]
    return sorted(minimal, key=lambda s: (len(s), s))
