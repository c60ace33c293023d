"""
Constrained edge bipartization and bipartite contraction, by reduction to
labeled vertex bipartization.

Encoding ids for a graph with n vertices and m edges (edges in sorted order):
v1 = 2v and v2 = 2v + 1 (labels 1, 2); edge j gets e' = 2n + 2j and
e'' = 2n + 2j + 1 (label 3); the label-4 shadows of v are 2n + 2m + 2v and
2n + 2m + 2v + 1.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import networkx as nx
from loguru import logger

from ..classes import GraphClass, rank
from ..graph.canonical import CanonicalGraph, canonical_form, canonicalize, induced_closure
from ..graph.colored import ColoredGraph, Edge, edge_key
from ..graph.ops import bipartite_2coloring, contract_edges
from .bipartization import g_bipartization, shortest_odd_cycle

LABEL_FIRST = 1
LABEL_SECOND = 2
LABEL_EDGE = 3
LABEL_SHADOW = 4


@dataclass(frozen=True)
class EdgeEncoding:
    """
    Attributes:
        source: The encoded graph G
        edges: Edges of G in encoding order
        incidence: G' (labels 1-3)
        full: G'' (G' plus the label-4 shadows)
    """

    source: ColoredGraph
    edges: Tuple[Edge, ...]
    incidence: ColoredGraph
    full: ColoredGraph

    def first(self, v: int) -> int:
        return 2 * v

    def second(self, v: int) -> int:
        return 2 * v + 1

    def edge_vertices(self, j: int) -> Tuple[int, int]:
        base = 2 * self.source.n + 2 * j
        return base, base + 1

    def shadow(self, v: int, i: int) -> int:
        return 2 * self.source.n + 2 * len(self.edges) + 2 * v + (i - 1)


def incidence_graph(g: ColoredGraph) -> Tuple[ColoredGraph, Tuple[Edge, ...]]:
    """
    G': an adjacent label-1/label-2 pair per vertex and, per edge uv, a label-3
    vertex adjacent to u1 and v2 and another adjacent to u2 and v1.
    """
    edges = tuple(g.edges())
    n = g.n
    out: List[Edge] = [(2 * v, 2 * v + 1) for v in range(n)]
    for j, (u, v) in enumerate(edges):
        e1, e2 = 2 * n + 2 * j, 2 * n + 2 * j + 1
        out += [(e1, 2 * u), (e1, 2 * v + 1), (e2, 2 * u + 1), (e2, 2 * v)]
    labels = [LABEL_FIRST, LABEL_SECOND] * n + [LABEL_EDGE] * (2 * len(edges))
    return ColoredGraph.from_edges(2 * n + 2 * len(edges), out, labels=labels), edges


def encode_edge_instance(g: ColoredGraph) -> EdgeEncoding:
    """
    Build G' and G''.

    Each shadow of v^i is adjacent to the other shadow of v, to every
    neighbor of v^i in G' and to u^i for every neighbor u of v in G.
    """
    incidence, edges = incidence_graph(g)
    n, m = g.n, len(edges)
    base = 2 * n + 2 * m
    out = incidence.edges()
    for v in range(n):
        bar1, bar2 = base + 2 * v, base + 2 * v + 1
        out.append((bar1, bar2))
        for i, bar in ((0, bar1), (1, bar2)):
            out += [(bar, w) for w in incidence.adjacency[2 * v + i]]
            out += [(bar, 2 * u + i) for u in g.adjacency[v]]
    labels = list(incidence.labels) + [LABEL_SHADOW] * (2 * n)
    full = ColoredGraph.from_edges(base + 2 * n, out, labels=labels)
    return EdgeEncoding(source=g, edges=edges, incidence=incidence, full=full)


def _edge_sets(k: int) -> List[CanonicalGraph]:
    """Graphs with at most k edges and no isolated vertices, up to isomorphism."""
    order = 2 * k
    level = {canonical_form((0,) * order, (0,) * order)}
    found = set(level)
    for _ in range(k):
        grown = set()
        for graph in level:
            for i in range(order):
                for j in range(i + 1, order):
                    if graph.rows[i] >> j & 1:
                        continue
                    rows = list(graph.rows)
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                    grown.add(canonical_form(graph.labels, rows))
        found |= grown
        level = grown
    out = {}
    for graph in found:
        keep = [i for i in range(graph.order) if graph.rows[i]]
        cg = canonicalize(graph.to_graph(), keep)
        out[cg] = None
    return sorted(out, key=lambda c: (c.edge_count, c.order, c.rows))


@lru_cache(maxsize=32)
def edge_class_members(graph_class: GraphClass, k: int) -> FrozenSet[CanonicalGraph]:
    """
    Labeled hereditary class for the encoded instance: H' and every induced
    subgraph of H' for each member H with at most k edges and no isolated
    vertices.
    """
    members: Set[CanonicalGraph] = set()
    accepted = 0
    for h in _edge_sets(k):
        if not graph_class.contains(h):
            continue
        accepted += 1
        incidence, _ = incidence_graph(h.to_graph())
        members |= induced_closure(canonicalize(incidence))
    logger.debug("edge class {} with <= {} edges: {} graphs, {} labeled members", graph_class.name, k, accepted, len(members))
    return frozenset(members)


@lru_cache(maxsize=32)
def _labeled_class(graph_class: GraphClass, k: int) -> GraphClass:
    members = edge_class_members(graph_class, k)
    return GraphClass(f"{graph_class.name}/edges<={k}", lambda graph: graph in members, members=members, labeled=True)


def edge_subgraph(edges: Sequence[Edge]) -> ColoredGraph:
    """The graph formed by an edge set, without isolated vertices."""
    ends = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(ends)}
    return ColoredGraph.from_edges(len(ends), [(index[u], index[v]) for u, v in edges])


def _without_edges(g: ColoredGraph, removed: FrozenSet[Edge]) -> ColoredGraph:
    return ColoredGraph.from_edges(g.n, [e for e in g.edges() if e not in removed])


def _cycle_edges(cycle: List[int]) -> List[Edge]:
    return sorted(edge_key(cycle[i - 1], cycle[i]) for i in range(len(cycle)))


class _EdgeBranching:
    """
    Bounded search tree over the edges of a shortest odd cycle.

    Every edge set meeting all odd cycles contains an edge of the current
    shortest one, and the class is closed under subgraphs, so partial sets
    outside the class are cut off.
    """

    def __init__(self, g: ColoredGraph, graph_class: GraphClass):
        self.g = g
        self.graph_class = graph_class
        self.admitted: Dict[FrozenSet[Edge], bool] = {}
        self.visited: Set[FrozenSet[Edge]] = set()
        self.nodes = 0

    def admits(self, chosen: FrozenSet[Edge]) -> bool:
        if self.graph_class.universal:
            return True
        if chosen not in self.admitted:
            self.admitted[chosen] = self.graph_class.contains(canonicalize(edge_subgraph(sorted(chosen))))
        return self.admitted[chosen]

    def solutions(self, budget: int) -> List[List[Edge]]:
        """Every solution reached with exactly ``budget`` edges."""
        self.visited.clear()
        found: List[List[Edge]] = []
        self._grow(frozenset(), budget, found)
        return found

    def _grow(self, chosen: FrozenSet[Edge], budget: int, found: List[List[Edge]]) -> None:
        if chosen in self.visited:
            return
        self.visited.add(chosen)
        self.nodes += 1
        rest = _without_edges(self.g, chosen)
        cycle = shortest_odd_cycle(rest, tuple(range(rest.n)))
        if cycle is None:
            if len(chosen) == budget:
                found.append(sorted(chosen))
            return
        if len(chosen) == budget:
            return
        for e in _cycle_edges(cycle):
            grown = chosen | {e}
            if self.admits(grown):
                self._grow(grown, budget, found)


def _branching_edge_bipartization(g: ColoredGraph, k: int, graph_class: GraphClass) -> Optional[List[Edge]]:
    search = _EdgeBranching(g, graph_class)
    for budget in range(1, min(k, g.m) + 1):
        found = search.solutions(budget)
        if found:
            logger.debug("edge branching: {} search nodes, {} solutions of {} edges", search.nodes, len(found), budget)
            return min(found)
    logger.debug("edge branching: {} search nodes, no solution within {} edges", search.nodes, k)
    return None


def g_edge_bipartization(
    g: ColoredGraph,
    k: int,
    graph_class: GraphClass,
    encoded: bool = True,
) -> Optional[List[Edge]]:
    """
    Edge set H with at most k edges, H in the class, g minus E(H) bipartite.

    Args:
        g: Graph
        k: Edge budget
        graph_class: Class closed under subgraphs
        encoded: Solve labeled vertex bipartization on G''; when False, branch
            on the edges of shortest odd cycles instead (minimum size,
            lexicographically smallest)

    Returns:
        Sorted edges of H (the edges whose endpoints share a color), or None
    """
    if g.is_bipartite():
        return []
    if not encoded:
        h = _branching_edge_bipartization(g, k, graph_class)
        if h is None:
            logger.info("no {} edge bipartization with <= {} edges", graph_class.name, k)
        return h
    encoding = encode_edge_instance(g)
    labeled = _labeled_class(graph_class, k)
    if not labeled.members:
        return None
    budget = max(member.order for member in labeled.members)
    found = g_bipartization(encoding.full, budget, labeled, reduce=False)
    if found is None:
        logger.info("no {} edge bipartization with <= {} edges", graph_class.name, k)
        return None
    rest = encoding.full.remove(found)
    coloring = bipartite_2coloring(rest, include_red=True)
    assert coloring is not None
    black = {rest.origin[v] for v in coloring[0]}
    side = [encoding.shadow(v, 1) in black for v in range(g.n)]
    h = [edge_key(u, v) for u, v in g.edges() if side[u] == side[v]]
    assert len(h) <= k
    logger.info("{} edge bipartization with {} edges", graph_class.name, len(h))
    return sorted(h)


def spanning_forest(edges: List[Edge]) -> List[Edge]:
    graph = nx.Graph()
    graph.add_edges_from(edges)
    return sorted(edge_key(u, v) for u, v in nx.minimum_spanning_edges(graph, algorithm="kruskal", data=False))


def minimalize(g: ColoredGraph, h: List[Edge]) -> List[Edge]:
    """Drop edges of H, in order, while g minus E(H) stays bipartite."""
    kept = set(h)
    for e in sorted(h):
        if _without_edges(g, frozenset(kept - {e})).is_bipartite():
            kept.discard(e)
    return sorted(kept)


def bipartite_contraction(g: ColoredGraph, k: int, encoded: bool = False) -> Optional[List[Edge]]:
    """
    Fewest edges, at most k, whose contraction leaves g bipartite.

    For rank bounds r = 1..k, finds H of rank at most r (hence at most
    C(r + 1, 2) edges) with g minus E(H) bipartite, minimalizes H so every
    edge of H is monochromatic in the 2-coloring of g minus E(H), and
    contracts a spanning forest of H.

    Args:
        g: Graph
        k: Contraction budget
        encoded: Forwarded to g_edge_bipartization

    Returns:
        Sorted forest edges, or None
    """
    if g.is_bipartite():
        return []
    for r in range(1, k + 1):
        h = g_edge_bipartization(g, comb(r + 1, 2), rank(r), encoded=encoded)
        if h is not None:
            break
    else:
        logger.info("no bipartite contraction with <= {} edges", k)
        return None
    h = minimalize(g, h)
    forest = spanning_forest(h)
    assert len(forest) <= r
    assert contract_edges(g, forest).is_bipartite()
    logger.info("bipartite contraction of {} edges (rank bound {})", len(forest), r)
    return forest
