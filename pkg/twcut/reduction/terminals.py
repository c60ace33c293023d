"""
The reduced graph G*: torso on the separator cover plus terminals, with every
red edge replaced by k + 1 parallel subdivided paths.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Set, Tuple

from loguru import logger

from ..errors import PreconditionError
from ..flow.network import min_vertex_cut
from ..graph.colored import SUBDIVISION, ColoredGraph, Edge, VertexSet, vertex_set
from ..graph.torso import torso
from .cover import cover_minimal_separators


@dataclass(frozen=True)
class ReductionResult:
    """
    Attributes:
        cover: C', the union of the pairwise separator covers (terminals excluded)
        reduced: G*
        origin_map: Vertex of G* -> vertex of the input, or SUBDIVISION
    """

    cover: VertexSet
    reduced: ColoredGraph
    origin_map: Tuple[int, ...]

    def local(self, vertex: int) -> int:
        """Id in G* of an input vertex that was retained."""
        try:
            return self.origin_map.index(vertex)
        except ValueError:
            raise PreconditionError(f"Vertex {vertex} is not retained in the reduced graph") from None

    @property
    def subdivision_vertices(self) -> VertexSet:
        return tuple(i for i, o in enumerate(self.origin_map) if o == SUBDIVISION)

    def lift(self, vertices: Iterable[int]) -> VertexSet:
        """Map G* vertices back to input ids, dropping subdivision vertices."""
        return tuple(sorted(self.origin_map[v] for v in vertices if self.origin_map[v] != SUBDIVISION))


def separator_cover(g: ColoredGraph, terminals: Iterable[int], k: int) -> VertexSet:
    """
    Union of the covers of all nonadjacent terminal pairs separable within k.

    Returns:
        Cover with the terminals removed
    """
    terms = vertex_set(terminals, g.n)
    cover: Set[int] = set()
    for s, t in combinations(terms, 2):
        if g.has_edge(s, t) or min_vertex_cut(g, s, t, k) is None:
            continue
        cover.update(cover_minimal_separators(g, s, t, k))
    return tuple(sorted(cover - set(terms)))


def subdivide_red(g: ColoredGraph, copies: int) -> ColoredGraph:
    """
    Replace every red edge uv by ``copies`` new vertices adjacent to u and v.

    New vertices are appended after the vertices of g, in sorted red-edge
    order, with label 0 and origin SUBDIVISION; all edges become black.
    """
    edges: List[Edge] = g.black_edges()
    n = g.n
    for u, v in g.red_edges():
        for _ in range(copies):
            edges.append((u, n))
            edges.append((v, n))
            n += 1
    extra = n - g.n
    return ColoredGraph.from_edges(
        n,
        edges,
        labels=list(g.labels) + [0] * extra,
        origin=list(range(g.n)) + [SUBDIVISION] * extra,
    )


def reduce_terminals(g: ColoredGraph, t_set: Iterable[int], k: int) -> ReductionResult:
    """
    Compute the reduced graph G* for a terminal set.

    Minimal separators of size at most k between terminals are the same in
    G* and g, and G* restricted to the cover plus terminals equals g there.

    Args:
        g: Graph
        t_set: Terminal set, at least two vertices
        k: Size bound

    Returns:
        ReductionResult whose origin_map refers to ids of g

    Raises:
        PreconditionError: If fewer than two terminals are given
    """
    terms = vertex_set(t_set, g.n)
    if len(terms) < 2:
        raise PreconditionError("At least two terminals are required")
    cover = separator_cover(g, terms, k)
    kept = torso(g, set(cover) | set(terms))
    reduced = subdivide_red(kept, k + 1)
    origin = tuple(kept.origin[o] if o != SUBDIVISION else SUBDIVISION for o in reduced.origin)
    reduced = ColoredGraph(reduced.n, reduced.adjacency, reduced.red, reduced.labels, origin)
    logger.debug(
        "reduced graph: {} cover + {} terminals, {} subdivision vertices",
        len(cover),
        len(terms),
        reduced.n - kept.n,
    )
    return ReductionResult(cover=cover, reduced=reduced, origin_map=origin)
