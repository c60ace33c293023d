"""
Odd cycle transversals and constrained bipartization.
"""

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Optional, Set, Tuple

import networkx as nx
from loguru import logger

from ..classes import EDGELESS, GraphClass
from ..errors import PreconditionError
from ..flow.network import min_vertex_cut
from ..graph.colored import SUBDIVISION, ColoredGraph, VertexSet, vertex_set
from ..graph.ops import bipartite_2coloring, is_proper_coloring
from ..reduction.sets import with_super_terminals
from ..utils.parallel import fan_out
from .cuts import g_mincut


@dataclass(frozen=True)
class BipartizationBranch:
    """
    Split of a known odd cycle transversal S0.

    Attributes:
        removed: R, vertices of S0 deleted by the solution
        black: B0, vertices of S0 kept and colored black
        white: W0, vertices of S0 kept and colored white
    """

    removed: VertexSet
    black: VertexSet
    white: VertexSet


def branches(g: ColoredGraph, s0: VertexSet, budget: Optional[int] = None) -> Iterator[BipartizationBranch]:
    """
    Every (R, B0, W0) split of S0 with B0 and W0 independent.

    Args:
        g: Graph
        s0: Odd cycle transversal
        budget: Skip splits with more than this many removed vertices
    """
    for assignment in product((0, 1, 2), repeat=len(s0)):
        parts: Tuple[List[int], List[int], List[int]] = ([], [], [])
        for v, side in zip(s0, assignment):
            parts[side].append(v)
        removed, black, white = parts
        if budget is not None and len(removed) > budget:
            continue
        if _independent(g, black) and _independent(g, white):
            yield BipartizationBranch(tuple(removed), tuple(black), tuple(white))


def _independent(g: ColoredGraph, vs: List[int]) -> bool:
    return all(not g.adjacency[u] & set(vs) for u in vs)


def separation_sets(
    bip: ColoredGraph,
    coloring: Tuple[VertexSet, VertexSet],
    b_target: VertexSet,
    w_target: VertexSet,
) -> Tuple[VertexSet, VertexSet]:
    """
    Terminal sets whose separators are exactly the deletions allowing a
    2-coloring with B black and W white.

    Args:
        bip: Bipartite graph
        coloring: Proper 2-coloring (B', W') of bip
        b_target: B, vertices that must end up black
        w_target: W, vertices that must end up white

    Returns:
        (X, Y) with X = (B & B') | (W & W') and Y = (B & W') | (W & B')

    Raises:
        PreconditionError: If the coloring is not a proper 2-coloring of bip
    """
    black, white = coloring
    if not is_proper_coloring(bip, black, white):
        raise PreconditionError("Not a proper 2-coloring of the graph")
    bs, ws = set(vertex_set(b_target, bip.n)), set(vertex_set(w_target, bip.n))
    bp, wp = set(black), set(white)
    x = (bs & bp) | (ws & wp)
    y = (bs & wp) | (ws & bp)
    return tuple(sorted(x)), tuple(sorted(y))


def _compress(g: ColoredGraph, s_prime: VertexSet, budget: int) -> Optional[VertexSet]:
    """OCT of g with at most ``budget`` vertices, given one with budget + 1."""
    rest = g.remove(s_prime)
    coloring = bipartite_2coloring(rest, include_red=True)
    assert coloring is not None
    local = {o: i for i, o in enumerate(rest.origin)}
    s_set = set(s_prime)
    for branch in branches(g, s_prime, budget):
        spare = budget - len(branch.removed)
        must_black = {local[u] for w in branch.white for u in g.adjacency[w] if u not in s_set}
        must_white = {local[u] for b in branch.black for u in g.adjacency[b] if u not in s_set}
        x, y = separation_sets(rest, coloring, tuple(sorted(must_black)), tuple(sorted(must_white)))
        if not x or not y:
            return tuple(sorted(branch.removed))
        extended, s, t = with_super_terminals(rest, x, y)
        cut = min_vertex_cut(extended, s, t, spare)
        if cut is not None:
            return tuple(sorted(set(branch.removed) | {rest.origin[v] for v in cut[1]}))
    return None


def _oct_within(g: ColoredGraph, budget: int) -> Optional[VertexSet]:
    solution: VertexSet = ()
    for i in range(g.n):
        prefix = g.induced(range(i + 1))
        candidate = tuple(sorted(set(solution) | {i}))
        if prefix.remove(solution).is_bipartite():
            continue
        if len(candidate) <= budget:
            solution = candidate
            continue
        compressed = _compress(prefix, candidate, budget)
        if compressed is None:
            return None
        solution = compressed
    return solution


def oct(g: ColoredGraph, k: int) -> Optional[VertexSet]:
    """
    Minimum odd cycle transversal with at most k vertices.

    Iterative deepening over the budget; each level runs iterative
    compression over the vertices in id order.

    Returns:
        Vertex set whose removal leaves g bipartite, or None
    """
    for budget in range(0, k + 1):
        found = _oct_within(g, budget)
        if found is not None:
            logger.debug("odd cycle transversal of size {} (budget {})", len(found), budget)
            return found
    return None


def _branch_graph(
    g: ColoredGraph,
    s0: VertexSet,
    branch: BipartizationBranch,
) -> Tuple[ColoredGraph, int, int, Tuple[int, ...]]:
    keep_out = set(branch.black) | set(branch.white)
    rest = g.remove(keep_out)
    local = {o: i for i, o in enumerate(rest.origin)}
    s0_set = set(s0)
    bip = g.remove(s0)
    coloring = bipartite_2coloring(bip, include_red=True)
    assert coloring is not None
    bip_local = {o: i for i, o in enumerate(bip.origin)}
    must_black = sorted({bip_local[u] for w in branch.white for u in g.adjacency[w] if u not in s0_set})
    must_white = sorted({bip_local[u] for b in branch.black for u in g.adjacency[b] if u not in s0_set})
    x, y = separation_sets(bip, coloring, tuple(must_black), tuple(must_white))
    sources = [local[bip.origin[v]] for v in x] + [local[v] for v in branch.removed]
    sinks = [local[bip.origin[v]] for v in y] + [local[v] for v in branch.removed]
    extended, s, t = with_super_terminals(rest, sources, sinks)
    return extended, s, t, rest.origin


def g_bipartization(
    g: ColoredGraph,
    k: int,
    graph_class: GraphClass,
    reduce: bool = True,
) -> Optional[VertexSet]:
    """
    Minimum S with at most k vertices, g minus S bipartite and G[S] in the class.

    Branches over every split (R, B0, W0) of a minimum odd cycle transversal
    S0 and solves one constrained s-t cut per branch.

    Args:
        g: Graph
        k: Size bound
        graph_class: Hereditary class for G[S]
        reduce: Forwarded to g_mincut

    Returns:
        Lexicographically smallest minimum solution, or None
    """
    s0 = oct(g, k)
    if s0 is None:
        return None
    candidates = list(branches(g, s0, k))

    def run(branch: BipartizationBranch) -> Optional[VertexSet]:
        extended, s, t, origin = _branch_graph(g, s0, branch)
        if not extended.adjacency[s] and not extended.adjacency[t]:
            found: Optional[VertexSet] = ()
        else:
            found = g_mincut(extended, s, t, k, graph_class, reduce=reduce)
        if found is None:
            return None
        return tuple(sorted(origin[v] for v in found))

    results = fan_out(run, candidates)
    best: Optional[VertexSet] = None
    for found in results:
        if found is not None and (best is None or (len(found), found) < (len(best), best)):
            best = found
    logger.info(
        "{} bipartization: oct {} vertices, {} branches, solution {}",
        graph_class.name,
        len(s0),
        len(candidates),
        "none" if best is None else len(best),
    )
    return best


def shortest_odd_cycle(g: ColoredGraph, s_known: VertexSet) -> Optional[List[int]]:
    """
    A shortest odd cycle, searched through the vertices of S.

    Every odd cycle meets S, so BFS in the bipartite double cover from each
    v in S (copy 0 to copy 1) finds the shortest one.

    Args:
        g: Graph
        s_known: Vertex set with g minus S bipartite

    Returns:
        Cycle as a vertex list (closing edge implicit), or None if g is bipartite

    Raises:
        PreconditionError: If g minus S is not bipartite
    """
    if not g.remove(s_known).is_bipartite():
        raise PreconditionError("The given set is not an odd cycle transversal")
    best: Optional[List[int]] = None
    for v in sorted(s_known):
        parent: Dict[Tuple[int, int], Tuple[int, int]] = {}
        start, goal = (v, 0), (v, 1)
        seen = {start}
        queue = deque([start])
        while queue and goal not in seen:
            node = queue.popleft()
            u, side = node
            for w in g.sorted_neighbors[u]:
                nxt = (w, 1 - side)
                if nxt not in seen:
                    seen.add(nxt)
                    parent[nxt] = node
                    queue.append(nxt)
        if goal not in seen:
            continue
        walk = [goal[0]]
        node = goal
        while node != start:
            node = parent[node]
            walk.append(node[0])
        cycle = walk[:-1]
        if best is None or len(cycle) < len(best):
            best = cycle
    return best


def _split_outside(g: ColoredGraph, allowed: Set[int], copies: int) -> ColoredGraph:
    """Replace every vertex outside ``allowed`` by ``copies`` independent twins."""
    twins: Dict[int, List[int]] = {v: [v] for v in range(g.n)}
    n = g.n
    for v in range(g.n):
        if v not in allowed:
            twins[v].extend(range(n, n + copies - 1))
            n += copies - 1
    edges = [(a, b) for u, v in g.edges() for a in twins[u] for b in twins[v]]
    origin = list(range(g.n)) + [SUBDIVISION] * (n - g.n)
    return ColoredGraph.from_edges(n, edges, origin=origin)


def _max_independent(g: ColoredGraph, vertices: Set[int]) -> List[int]:
    """Maximum independent set of a bipartite induced subgraph (Koenig)."""
    sub = g.induced(vertices)
    graph = sub.to_networkx()
    left = set()
    for comp in nx.connected_components(graph):
        side, _ = nx.bipartite.sets(graph.subgraph(comp))
        left.update(side)
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=left)
    cover = nx.bipartite.to_vertex_cover(graph, matching, top_nodes=left)
    return sorted(sub.origin[v] for v in graph.nodes if v not in cover)


def _extend_on_cycle(g: ColoredGraph, solution: Set[int], cycle: List[int], allowed: Set[int], need: int) -> Optional[Set[int]]:
    blocked = set(solution)
    for v in solution:
        blocked.update(g.adjacency[v])
    picked: Set[int] = set()
    for v in cycle:
        if len(picked) == need:
            break
        if v in allowed and v not in blocked and not g.adjacency[v] & picked:
            picked.add(v)
    if len(picked) < need:
        return None
    return solution | picked


def exact_stable_bipartization(g: ColoredGraph, k: int) -> Optional[VertexSet]:
    """
    Independent set of exactly k vertices whose removal leaves g bipartite.

    Recursion over (remaining graph, deletable set D, k). Short odd cycles
    are branched on; a long shortest odd cycle hands the instance to stable
    bipartization with undeletable vertices split into k + 1 copies, and a
    smaller answer is padded with independent vertices of that cycle.

    Returns:
        Sorted solution of size k, or None
    """
    found = _exact(g, frozenset(range(g.n)), frozenset(range(g.n)), k)
    if found is None:
        logger.info("no independent odd cycle transversal of exactly {} vertices", k)
        return None
    return tuple(sorted(found))


def _exact(g: ColoredGraph, alive: frozenset, deletable: frozenset, k: int) -> Optional[Set[int]]:
    current = g.induced(alive)
    if k == 0:
        return set() if current.is_bipartite() else None
    if current.is_bipartite():
        pool = _max_independent(g, set(deletable))
        return set(pool[:k]) if len(pool) >= k else None
    if not g.induced(alive - deletable).is_bipartite():
        return None
    s_prime = oct(current, k)
    if s_prime is None:
        return None
    local_cycle = shortest_odd_cycle(current, s_prime)
    assert local_cycle is not None
    cycle = [current.origin[v] for v in local_cycle]
    on_cycle = [v for v in cycle if v in deletable]

    if len(on_cycle) > 3 * k + 1:
        local_allowed = {i for i, o in enumerate(current.origin) if o in deletable}
        split = _split_outside(current, local_allowed, k + 1)
        stable = g_bipartization(split, k, EDGELESS)
        if stable is None:
            return None
        base = {current.origin[v] for v in stable}
        extended = _extend_on_cycle(g, base, cycle, set(deletable), k - len(base))
        if extended is not None:
            return extended
        logger.warning("padding along a long odd cycle failed; branching on its {} vertices", len(on_cycle))

    for v in sorted(on_cycle):
        rest = _exact(g, alive - {v}, deletable - {v} - g.adjacency[v], k - 1)
        if rest is not None:
            return rest | {v}
    return None
