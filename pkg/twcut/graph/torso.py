"""
The torso operation.
"""

from itertools import combinations
from typing import Iterable, Set

from .colored import ColoredGraph, Edge, edge_key, vertex_set


def torso(g: ColoredGraph, c: Iterable[int]) -> ColoredGraph:
    """
    Torso of g on the vertex set C.

    Two vertices of C are adjacent in the torso if they are adjacent in g or
    joined by a path whose internal vertices all lie outside C. Computed by
    turning N(K) into a clique for every component K of g minus C. Edges of
    g keep their color, new edges are red.

    Args:
        g: Host graph
        c: Retained vertex set

    Returns:
        Graph on C; vertex i is the i-th smallest member of C and its origin
        is that id in g
    """
    keep = vertex_set(c, g.n)
    index = {v: i for i, v in enumerate(keep)}
    black: Set[Edge] = set()
    red: Set[Edge] = set()
    for u in keep:
        for v in g.adjacency[u]:
            if v in index and u < v:
                key = edge_key(index[u], index[v])
                (red if (u, v) in g.red else black).add(key)
    for component in g.components(exclude=keep):
        attached = g.neighborhood(component)
        for u, v in combinations(attached, 2):
            key = edge_key(index[u], index[v])
            if key not in black:
                red.add(key)
    return ColoredGraph.from_edges(
        len(keep),
        sorted(black),
        sorted(red - black),
        labels=[g.labels[v] for v in keep],
        origin=keep,
    )
