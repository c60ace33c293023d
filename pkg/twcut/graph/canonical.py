"""
Canonical forms of small labeled graphs.

Color refinement followed by an individualization-refinement search; the
canonical form is the smallest adjacency code over all leaves of the search
tree. Twin vertices of a target cell are individualized only once.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..config import get_settings
from ..errors import CanonicalSizeError, NonHereditaryClassError
from .colored import ColoredGraph


def _bits(mask: int) -> List[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class CanonicalGraph:
    """
    Canonical representative of an isomorphism class of labeled graphs.

    Attributes:
        order: Vertex count
        labels: Label of each vertex, in canonical order
        rows: Adjacency bitmask of each vertex, in canonical order
    """

    order: int
    labels: Tuple[Any, ...]
    rows: Tuple[int, ...]

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(self.order) for j in _bits(self.rows[i]) if i < j]

    @property
    def edge_count(self) -> int:
        return sum(bin(r).count("1") for r in self.rows) // 2

    def degree(self, i: int) -> int:
        return bin(self.rows[i]).count("1")

    def delete(self, i: int) -> "CanonicalGraph":
        """Canonical form of the graph minus vertex i."""
        keep = [j for j in range(self.order) if j != i]
        return canonical_form(
            tuple(self.labels[j] for j in keep),
            _restrict_rows(self.rows, keep),
        )

    def relabel(self, labels: Sequence[Any]) -> "CanonicalGraph":
        return canonical_form(tuple(labels), self.rows)

    def unlabeled(self) -> "CanonicalGraph":
        return canonical_form((0,) * self.order, self.rows)

    def components(self) -> int:
        seen = 0
        count = 0
        for root in range(self.order):
            if seen >> root & 1:
                continue
            count += 1
            frontier = 1 << root
            seen |= frontier
            while frontier:
                grow = 0
                for v in _bits(frontier):
                    grow |= self.rows[v]
                frontier = grow & ~seen
                seen |= frontier
        return count

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for i in range(self.order):
            graph.add_node(i, label=self.labels[i])
        graph.add_edges_from(self.edges())
        return graph

    def to_graph(self) -> ColoredGraph:
        return ColoredGraph.from_edges(self.order, self.edges(), labels=[int(x) for x in self.labels])


def _restrict_rows(rows: Sequence[int], keep: Sequence[int]) -> Tuple[int, ...]:
    position = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        mask = 0
        for u in _bits(rows[v]):
            if u in position:
                mask |= 1 << position[u]
        out.append(mask)
    return tuple(out)


def _rank(keys: Sequence[Any]) -> List[int]:
    order = {key: i for i, key in enumerate(sorted(set(keys)))}
    return [order[key] for key in keys]


def _refine(colors: List[int], neighbors: Sequence[Sequence[int]]) -> List[int]:
    cells = max(colors) + 1
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in neighbors[v]))) for v in range(len(colors))
        ]
        refined = _rank(signatures)
        count = max(refined) + 1
        if count == cells:
            return refined
        colors, cells = refined, count


def _twins(rows: Sequence[int], u: int, v: int) -> bool:
    return (rows[u] & ~(1 << v)) == (rows[v] & ~(1 << u))


@lru_cache(maxsize=262144)
def _canonical(labels: Tuple[Any, ...], rows: Tuple[int, ...]) -> CanonicalGraph:
    n = len(labels)
    if n == 0:
        return CanonicalGraph(0, (), ())
    neighbors = [_bits(rows[v]) for v in range(n)]
    start = _refine(_rank([(labels[v], len(neighbors[v])) for v in range(n)]), neighbors)
    best: List[Optional[Tuple[int, ...]]] = [None]
    best_order: List[Optional[List[int]]] = [None]

    def leaf(colors: List[int]) -> None:
        order = sorted(range(n), key=lambda v: colors[v])
        code = tuple(
            sum(1 << colors[u] for u in neighbors[v]) for v in order
        )
        if best[0] is None or code < best[0]:
            best[0] = code
            best_order[0] = order

    stack = [start]
    while stack:
        colors = stack.pop()
        counts = [0] * n
        for c in colors:
            counts[c] += 1
        target = next((c for c in range(n) if counts[c] > 1), None)
        if target is None:
            leaf(colors)
            continue
        cell = [v for v in range(n) if colors[v] == target]
        tried: List[int] = []
        for v in cell:
            if any(_twins(rows, u, v) for u in tried):
                continue
            tried.append(v)
            split = _rank([(colors[u], 0 if u == v else 1) for u in range(n)])
            stack.append(_refine(split, neighbors))

    order = best_order[0]
    assert order is not None and best[0] is not None
    return CanonicalGraph(n, tuple(labels[v] for v in order), best[0])


def canonical_form(labels: Sequence[Any], rows: Sequence[int]) -> CanonicalGraph:
    """
    Canonical form of a labeled graph given by adjacency bitmasks.

    Args:
        labels: Sortable label per vertex
        rows: Adjacency bitmask per vertex

    Returns:
        CanonicalGraph equal for exactly the isomorphic (label-preserving) inputs

    Raises:
        CanonicalSizeError: If the graph has more than k_max vertices
    """
    limit = get_settings().k_max
    if len(labels) > limit:
        raise CanonicalSizeError(
            f"Cannot canonicalize {len(labels)} vertices (limit {limit}); set TWCUT_K_MAX to raise it"
        )
    return _canonical(tuple(labels), tuple(rows))


def canonicalize(
    g: ColoredGraph,
    vertices: Optional[Iterable[int]] = None,
    include_red: bool = True,
) -> CanonicalGraph:
    """
    Canonical form of g, or of the subgraph induced by ``vertices``.

    Args:
        g: Graph
        vertices: Restrict to these vertices (default all)
        include_red: Count red edges (False gives the black-induced graph)

    Returns:
        CanonicalGraph of the (sub)graph, vertex labels respected
    """
    keep = sorted(set(vertices)) if vertices is not None else list(range(g.n))
    adjacency = g.adjacency if include_red else g.black_adjacency
    position = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        mask = 0
        for u in adjacency[v]:
            if u in position:
                mask |= 1 << position[u]
        rows.append(mask)
    return canonical_form(tuple(g.labels[v] for v in keep), tuple(rows))


def extend_by_vertex(graph: CanonicalGraph, label: Any = 0) -> List[CanonicalGraph]:
    """All distinct graphs obtained by adding one vertex with the given label."""
    n = graph.order
    seen: Set[CanonicalGraph] = set()
    out = []
    for mask in range(1 << n):
        rows = [graph.rows[i] | ((mask >> i & 1) << n) for i in range(n)]
        rows.append(mask)
        candidate = canonical_form(graph.labels + (label,), rows)
        if candidate not in seen:
            seen.add(candidate)
            out.append(candidate)
    return out


def graphs_up_to(order: int) -> List[CanonicalGraph]:
    """
    All unlabeled graphs with at most ``order`` vertices, up to isomorphism.

    Returns:
        Canonical forms, grouped by increasing vertex count
    """
    level = [canonical_form((), ())]
    result = list(level)
    for _ in range(order):
        nxt: Set[CanonicalGraph] = set()
        for graph in level:
            nxt.update(extend_by_vertex(graph))
        level = sorted(nxt, key=lambda c: (c.edge_count, c.rows))
        result.extend(level)
    return result


def induced_closure(graph: CanonicalGraph) -> FrozenSet[CanonicalGraph]:
    """Canonical forms of every induced subgraph (closure under vertex deletion)."""
    found = {graph}
    frontier = [graph]
    while frontier:
        nxt = []
        for current in frontier:
            for i in range(current.order):
                smaller = current.delete(i)
                if smaller not in found:
                    found.add(smaller)
                    nxt.append(smaller)
        frontier = nxt
    return frozenset(found)


def compile_hereditary(
    oracle: Callable[[CanonicalGraph], bool], max_order: int
) -> FrozenSet[CanonicalGraph]:
    """
    Compile a hereditary class into its members with at most ``max_order`` vertices.

    Members are grown one vertex at a time from members only; every accepted
    graph is checked to have all its one-vertex deletions in the class.

    Args:
        oracle: Membership test on unlabeled canonical graphs
        max_order: Largest member size to enumerate

    Returns:
        Frozen set of canonical member graphs (the empty graph included)

    Raises:
        NonHereditaryClassError: If a member has a non-member induced subgraph
    """
    empty = canonical_form((), ())
    if not oracle(empty):
        return frozenset()
    members: Set[CanonicalGraph] = {empty}
    rejected: Set[CanonicalGraph] = set()
    level = [empty]
    for _ in range(max_order):
        nxt: List[CanonicalGraph] = []
        accepted: Set[CanonicalGraph] = set()
        for graph in level:
            for candidate in extend_by_vertex(graph):
                if candidate in accepted or candidate in rejected:
                    continue
                if not oracle(candidate):
                    rejected.add(candidate)
                    continue
                for i in range(candidate.order):
                    if candidate.delete(i) not in members:
                        raise NonHereditaryClassError(
                            f"Class is not hereditary: a member on {candidate.order} vertices "
                            f"has a non-member induced subgraph"
                        )
                accepted.add(candidate)
                nxt.append(candidate)
        if not nxt:
            break
        members.update(nxt)
        level = nxt
    return frozenset(members)


def check_hereditary(members: Iterable[CanonicalGraph]) -> FrozenSet[CanonicalGraph]:
    """
    Validate that an explicit member list is closed under vertex deletion.

    Returns:
        The member set with the empty graph added

    Raises:
        NonHereditaryClassError: On the first member with a missing deletion
    """
    found = set(members)
    if found:
        found.add(canonical_form((), ()))
    for graph in found:
        for i in range(graph.order):
            if graph.delete(i) not in found:
                raise NonHereditaryClassError(
                    f"Member with {graph.order} vertices and {graph.edge_count} edges "
                    f"loses membership when vertex {i} is deleted"
                )
    return frozenset(found)
