"""
Constrained s-t cuts and multicut-uncut.

Every solver reduces the instance to a graph of bounded treewidth that keeps
all relevant small separators, then runs the separator DP on a min-fill
decomposition of it.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from loguru import logger

from ..classes import EDGELESS, GraphClass, max_deficiency
from ..decomposition.nice import make_nice
from ..decomposition.tree import decompose
from ..dp.demand import SeparationDemand
from ..dp.engine import solve
from ..errors import PreconditionError, SeparatorBoundError
from ..flow.network import min_vertex_cut
from ..graph.colored import ColoredGraph, Edge, VertexSet, edge_key, vertex_set
from ..graph.ops import is_separator
from ..graph.torso import torso
from ..logger import current_stats
from ..reduction.sets import cover_set_separators, project_terminals
from ..reduction.terminals import reduce_terminals

PairList = Sequence[Tuple[Iterable[int], Iterable[int]]]


def host_for(g: ColoredGraph, graph_class: GraphClass) -> ColoredGraph:
    """Drop vertex labels unless the class is label-sensitive."""
    if graph_class.labeled or not any(g.labels):
        return g
    return g.with_labels([0] * g.n)


def solve_on(
    g: ColoredGraph,
    demand: SeparationDemand,
    k: int,
    graph_class: GraphClass,
    forbidden: Iterable[int] = (),
) -> Optional[VertexSet]:
    """Run the separator DP on a min-fill decomposition of g."""
    td = decompose(g)
    current_stats().note_reduced(g.n)
    return solve(host_for(g, graph_class), make_nice(td), demand, k, graph_class.spec(k), forbidden)


def g_mincut(
    g: ColoredGraph,
    s: int,
    t: int,
    k: int,
    graph_class: GraphClass,
    reduce: bool = True,
) -> Optional[VertexSet]:
    """
    Minimum s-t separator S with at most k vertices and G[S] in the class.

    Args:
        g: Graph
        s: Source
        t: Sink
        k: Size bound
        graph_class: Hereditary class for the black-induced subgraph of S
        reduce: Solve on the reduced graph (False runs the DP on g itself)

    Returns:
        Lexicographically smallest minimum separator, or None

    Raises:
        PreconditionError: If s = t
        NonHereditaryClassError: If the compiled class is not hereditary
    """
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise PreconditionError("Source and sink must differ")
    if g.has_edge(s, t) or min_vertex_cut(g, s, t, k) is None:
        return None
    demand = SeparationDemand.single(s, t)
    if not reduce:
        return solve_on(g, demand, k, graph_class, (s, t))

    result = reduce_terminals(g, (s, t), k)
    star = result.reduced
    forbidden = (result.local(s), result.local(t)) + result.subdivision_vertices
    found = solve_on(
        star,
        SeparationDemand.single(result.local(s), result.local(t)),
        k,
        graph_class,
        forbidden,
    )
    if found is None:
        logger.info("no {} s-t separator of size <= {}", graph_class.name, k)
        return None
    solution = result.lift(found)
    logger.info("{} s-t separator of size {} (reduced graph {} vertices)", graph_class.name, len(solution), star.n)
    return solution


def stable_cut(g: ColoredGraph, s: int, t: int, k: int) -> Optional[VertexSet]:
    """Minimum independent s-t separator of at most k vertices."""
    return g_mincut(g, s, t, k, EDGELESS)


def _cover_edges(g: ColoredGraph, sep: VertexSet, terminals: Tuple[int, int]) -> List[Edge]:
    inside = set(sep)
    sub = nx.Graph()
    sub.add_nodes_from(sep)
    sub.add_edges_from((u, v) for u, v in g.edges() if u in inside and v in inside)
    matching = sorted(edge_key(u, v) for u, v in nx.max_weight_matching(sub, maxcardinality=True))
    matched = {v for e in matching for v in e}
    cover = list(matching)
    for v in sep:
        if v in matched:
            continue
        nbrs = g.sorted_neighbors[v]
        choice = next((u for u in nbrs if u in inside), None)
        if choice is None:
            choice = next((u for u in nbrs if u not in terminals), nbrs[0])
        cover.append(edge_key(v, choice))
    return sorted(set(cover))


def edge_induced_vertex_cut(g: ColoredGraph, s: int, t: int, k: int) -> Optional[Tuple[VertexSet, List[Edge]]]:
    """
    s-t separator covered by at most k edges.

    Searches separators of at most 2k vertices whose vertex count minus
    matching number is at most k, then covers S by a maximum matching of G[S]
    plus one incident edge per unmatched vertex.

    Returns:
        (separator, covering edges) or None
    """
    sep = g_mincut(g, s, t, 2 * k, max_deficiency(k))
    if sep is None:
        return None
    cover = _cover_edges(g, sep, (s, t))
    assert len(cover) <= k
    return sep, cover


def multicut_uncut(
    g: ColoredGraph,
    cut_pairs: PairList,
    uncut_pairs: PairList,
    k: int,
    graph_class: GraphClass,
) -> Optional[VertexSet]:
    """
    Minimum S separating every cut pair and no uncut pair, G[S] in the class.

    Solutions are searched inside the union C of the separator covers of the
    cut pairs, on the torso of C with every pair projected onto C. Uncut
    pairs that C itself does not separate are satisfied by any S inside C.

    Args:
        g: Graph
        cut_pairs: (X, Y) pairs to separate
        uncut_pairs: (X, Y) pairs to keep connected
        k: Size bound
        graph_class: Hereditary class for G[S]

    Returns:
        Minimum-size solution (lexicographically smallest on the torso), or None
    """
    cuts = [(vertex_set(x, g.n), vertex_set(y, g.n)) for x, y in cut_pairs]
    uncuts = [(vertex_set(x, g.n), vertex_set(y, g.n)) for x, y in uncut_pairs]
    c: set = set()
    for x, y in cuts:
        if not x or not y:
            continue
        try:
            c.update(cover_set_separators(g, x, y, k))
        except SeparatorBoundError:
            logger.info("a cut pair needs more than {} vertices", k)
            return None
    kept_uncuts = [(x, y) for x, y in uncuts if is_separator(g, c, x, y)]
    t = torso(g, c)
    local = {o: i for i, o in enumerate(t.origin)}

    def project(pairs: List[Tuple[VertexSet, VertexSet]]) -> List[Tuple[List[int], List[int]]]:
        out = []
        for x, y in pairs:
            px, py = project_terminals(g, c, x, y)
            out.append(([local[v] for v in px], [local[v] for v in py]))
        return out

    demand = SeparationDemand.of(project([p for p in cuts if p[0] and p[1]]), project(kept_uncuts))
    found = solve_on(t, demand, k, graph_class)
    if found is None:
        return None
    solution = tuple(sorted(t.origin[v] for v in found))
    logger.info(
        "multicut-uncut: {} cut / {} uncut pairs, cover {} vertices, solution size {}",
        len(cuts),
        len(kept_uncuts),
        len(c),
        len(solution),
    )
    return solution
