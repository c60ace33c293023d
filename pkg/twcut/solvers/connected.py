"""
Connected s-t separators.

The separator cover is enlarged by small connectors inside every component
it leaves, so that some minimum connected separator lives in the enlarged
set; the DP then searches it on the torso.
"""

from collections import deque
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Set

from loguru import logger

from ..config import get_settings
from ..decomposition.nice import make_nice
from ..decomposition.tree import decompose
from ..dp.constraints import ConstraintSpec
from ..dp.demand import SeparationDemand
from ..dp.engine import solve
from ..errors import PreconditionError
from ..flow.network import min_vertex_cut
from ..graph.colored import ColoredGraph, VertexSet, vertex_set
from ..graph.torso import torso
from ..logger import current_stats
from ..reduction.cover import cover_minimal_separators

INF = float("inf")


def _tree_sizes(g: ColoredGraph, terms: VertexSet, k: int, allowed: Set[int]) -> Dict[int, List[float]]:
    """Subset DP: fewest edges of a tree spanning a terminal subset and each vertex."""
    full = 1 << len(terms)
    f: Dict[int, List[float]] = {mask: [INF] * g.n for mask in range(1, full)}
    for i, x in enumerate(terms):
        f[1 << i][x] = 0
    for mask in range(1, full):
        row = f[mask]
        sub = (mask - 1) & mask
        while sub:
            other = f[mask ^ sub]
            part = f[sub]
            for v in allowed:
                value = part[v] + other[v]
                if value < row[v]:
                    row[v] = value
            sub = (sub - 1) & mask
        queue = deque(sorted(v for v in allowed if row[v] < k))
        while queue:
            v = queue.popleft()
            for u in g.sorted_neighbors[v]:
                if u in allowed and row[v] + 1 < row[u] and row[v] + 1 < k:
                    row[u] = row[v] + 1
                    queue.append(u)
    return f


def _connected_sets(g: ColoredGraph, root: int, size: int, allowed: Set[int]) -> Iterable[FrozenSet[int]]:
    seen: Set[FrozenSet[int]] = set()
    level = {frozenset([root])}
    for _ in range(size - 1):
        grown: Set[FrozenSet[int]] = set()
        for current in level:
            for v in current:
                for u in g.adjacency[v]:
                    if u in allowed and u not in current:
                        candidate = current | {u}
                        if candidate not in seen:
                            seen.add(candidate)
                            grown.add(candidate)
        level = grown
    return level


def steiner_tree_bounded(
    g: ColoredGraph,
    x: Iterable[int],
    k: int,
    allowed: Optional[Iterable[int]] = None,
) -> Optional[VertexSet]:
    """
    Vertex set of a smallest tree containing X with at most k vertices.

    Args:
        g: Graph
        x: Terminal vertices
        k: Bound on the tree's vertex count
        allowed: Restrict the tree to these vertices (default all)

    Returns:
        Lexicographically smallest minimum vertex set, or None
    """
    terms = vertex_set(x, g.n)
    room = set(vertex_set(allowed, g.n)) if allowed is not None else set(range(g.n))
    if not terms:
        return ()
    if len(terms) > k or not set(terms) <= room:
        return None
    if len(terms) == 1:
        return terms
    f = _tree_sizes(g, terms, k, room)
    best = min(f[(1 << len(terms)) - 1][v] for v in room)
    if best >= k:
        return None
    size = int(best) + 1
    wanted = set(terms)
    witness = min(
        (tuple(sorted(s)) for s in _connected_sets(g, terms[0], size, room) if wanted <= s),
        default=None,
    )
    assert witness is not None
    return witness


def connector_set(g: ColoredGraph, s: int, t: int, k: int) -> VertexSet:
    """
    Separator cover plus minimum connectors of its components.

    For every component K of g minus the cover with neighborhood N, and every
    nonempty X inside N with at most k vertices, a smallest tree containing X
    inside (K + N) minus {s, t} is added.
    """
    cover = cover_minimal_separators(g, s, t, k)
    result = set(cover)
    limit = get_settings().max_connector_subsets
    for comp in g.components(exclude=cover):
        nbrs = [v for v in g.neighborhood(comp) if v not in (s, t)]
        room = (set(comp) | set(nbrs)) - {s, t}
        total = sum(comb(len(nbrs), r) for r in range(2, min(k, len(nbrs)) + 1))
        if total > limit:
            logger.warning(
                "component of {} vertices has {} connector subsets (limit {})", len(comp), total, limit
            )
        for r in range(2, min(k, len(nbrs)) + 1):
            for subset in combinations(nbrs, r):
                tree = steiner_tree_bounded(g, subset, k, room)
                if tree is not None:
                    result.update(tree)
    result -= {s, t}
    return tuple(sorted(result))


def connected_cut(g: ColoredGraph, s: int, t: int, k: int) -> Optional[VertexSet]:
    """
    Minimum s-t separator of at most k vertices that is connected by black edges.

    Returns:
        Separator or None (the empty set when s and t are disconnected)

    Raises:
        PreconditionError: If s = t
    """
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise PreconditionError("Source and sink must differ")
    cut = min_vertex_cut(g, s, t, k) if not g.has_edge(s, t) else None
    if cut is None:
        return None
    if cut[0] == 0:
        return ()
    c = connector_set(g, s, t, k)
    kept = torso(g, set(c) | {s, t})
    local = {o: i for i, o in enumerate(kept.origin)}
    current_stats().note_reduced(kept.n)
    found = solve(
        kept,
        make_nice(decompose(kept)),
        SeparationDemand.single(local[s], local[t]),
        k,
        ConstraintSpec.connected_black(),
        (local[s], local[t]),
    )
    if found is None:
        logger.info("no connected s-t separator of size <= {}", k)
        return None
    solution = tuple(sorted(kept.origin[v] for v in found))
    logger.info("connected s-t separator of size {} from {} candidates", len(solution), len(c))
    return solution
