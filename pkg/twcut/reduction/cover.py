"""
Covering every small minimal s-t separator by one vertex set.

The cover is built from the chain of minimum separators and, while the
size bound exceeds the minimum, from recursive calls on the layers between
consecutive chain separators with parts of the boundary contracted into
two new terminals.
"""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Sequence, Set, Tuple

from loguru import logger

from ..errors import PreconditionError, SeparatorBoundError
from ..flow.chain import SeparatorChain, separator_chain
from ..flow.network import min_vertex_cut
from ..graph.colored import SUBDIVISION, ColoredGraph, VertexSet, edge_key


@dataclass(frozen=True)
class LayerContext:
    """
    One layer L_i between consecutive chain separators.

    Attributes:
        index: Layer number i (1..q+1)
        vertices: L_i = X_i minus (X_(i-1) union S_(i-1))
        boundary: S_(i-1) union S_i
    """

    index: int
    vertices: VertexSet
    boundary: VertexSet


def layers(g: ColoredGraph, s: int, t: int, chain: SeparatorChain) -> Iterator[LayerContext]:
    """
    Iterate the layers of a separator chain, X_0 = {} and X_(q+1) = V minus {t}.

    Yields:
        LayerContext for i = 1..q+1, empty layers included
    """
    xs: List[Set[int]] = [set()] + [set(x) for x in chain.sets()] + [set(range(g.n)) - {t}]
    seps: List[VertexSet] = [(s,)] + list(chain.separators) + [(t,)]
    for i in range(1, len(xs)):
        layer = xs[i] - xs[i - 1] - set(seps[i - 1])
        yield LayerContext(
            index=i,
            vertices=tuple(sorted(layer)),
            boundary=tuple(sorted(set(seps[i - 1]) | set(seps[i]))),
        )


def contract_layer(
    g: ColoredGraph, layer: Sequence[int], a_side: Sequence[int], b_side: Sequence[int]
) -> Tuple[ColoredGraph, int, int]:
    """
    Build G_(i,A,B): g[L_i + A + B] with A contracted to a and B to b.

    Args:
        g: Host graph
        layer: Layer vertices L_i
        a_side: Boundary vertices merged into a
        b_side: Boundary vertices merged into b

    Returns:
        (graph, a, b); layer vertices keep their order, a and b are the two
        last ids and have origin SUBDIVISION
    """
    index = {v: i for i, v in enumerate(layer)}
    a = len(layer)
    b = a + 1
    side = {v: a for v in a_side}
    side.update({v: b for v in b_side})
    edges = set()
    for v in layer:
        for u in g.adjacency[v]:
            if u in index:
                if v < u:
                    edges.add((index[v], index[u]))
            elif u in side:
                edges.add(edge_key(index[v], side[u]))
    if any(u in side and side[u] == b for v in a_side for u in g.adjacency[v]):
        edges.add((a, b))
    return (
        ColoredGraph.from_edges(
            len(layer) + 2,
            sorted(edges),
            origin=list(layer) + [SUBDIVISION, SUBDIVISION],
        ),
        a,
        b,
    )


def _boundary_splits(boundary: VertexSet) -> Iterator[Tuple[VertexSet, VertexSet]]:
    # 0: unused, 1: into A, 2: into B; mirror images (B, A) are skipped
    for assignment in product((0, 1, 2), repeat=len(boundary)):
        first = next((x for x in assignment if x), 0)
        if first != 1 or 2 not in assignment:
            continue
        yield (
            tuple(v for v, x in zip(boundary, assignment) if x == 1),
            tuple(v for v, x in zip(boundary, assignment) if x == 2),
        )


def _cover(g: ColoredGraph, s: int, t: int, k: int, ell: int) -> Set[int]:
    chain = separator_chain(g, s, t)
    cover: Set[int] = set(chain.union())
    excess = k - ell
    if excess == 0:
        return cover
    for layer in layers(g, s, t, chain):
        if not layer.vertices:
            continue
        for a_side, b_side in _boundary_splits(layer.boundary):
            sub, a, b = contract_layer(g, layer.vertices, a_side, b_side)
            found = min_vertex_cut(sub, a, b, k)
            if found is None or found[0] == 0:
                continue
            ell_ab = found[0]
            bound = min(k, ell_ab + excess - 1)
            inner = _cover(sub, a, b, bound, ell_ab)
            cover.update(sub.origin[v] for v in inner)
    return cover


def cover_minimal_separators(g: ColoredGraph, s: int, t: int, k: int) -> VertexSet:
    """
    A set containing every minimal s-t separator of size at most k.

    Args:
        g: Graph
        s: Source vertex
        t: Sink vertex
        k: Size bound

    Returns:
        C' disjoint from {s, t}; empty when s and t are disconnected

    Raises:
        PreconditionError: If s = t or s and t are adjacent
        SeparatorBoundError: If the minimum separator is larger than k
    """
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise PreconditionError("Source and sink must differ")
    if g.has_edge(s, t):
        raise PreconditionError(f"Vertices {s} and {t} are adjacent; no separator exists")
    found = min_vertex_cut(g, s, t, k)
    if found is None:
        raise SeparatorBoundError(f"Minimum separator between {s} and {t} exceeds {k}")
    ell = found[0]
    if ell == 0:
        return ()
    cover = _cover(g, s, t, k, ell)
    cover.discard(s)
    cover.discard(t)
    logger.debug("cover {}->{} k={} ell={}: {} vertices", s, t, k, ell, len(cover))
    return tuple(sorted(cover))
