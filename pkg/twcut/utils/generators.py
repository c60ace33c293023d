"""
Random and structured instance generators.
"""

from enum import Enum
from typing import Optional

import networkx as nx

from ..errors import PreconditionError
from ..graph.colored import ColoredGraph


class GraphKind(str, Enum):
    GNP = "gnp"
    HYPERCUBE = "hypercube"
    CYCLE = "cycle"
    PATH = "path"
    STAR = "star"
    GRID = "grid"


def generate(kind: GraphKind, n: int = 10, p: float = 0.3, dim: int = 3, seed: Optional[int] = None) -> ColoredGraph:
    """
    Build a graph of the given family.

    Args:
        kind: Graph family
        n: Vertex count (gnp, cycle, path), leaf count (star) or side length (grid)
        p: Edge probability (gnp)
        dim: Dimension (hypercube)
        seed: Random seed (gnp)

    Returns:
        The graph, vertices renumbered in networkx node order

    Raises:
        PreconditionError: On sizes the family does not admit
    """
    kind = GraphKind(kind)
    if n < 0 or dim < 0:
        raise PreconditionError("Sizes must be nonnegative")
    if kind == GraphKind.GNP:
        if not 0.0 <= p <= 1.0:
            raise PreconditionError(f"Edge probability {p} outside [0, 1]")
        graph = nx.gnp_random_graph(n, p, seed=seed)
    elif kind == GraphKind.HYPERCUBE:
        return hypercube(dim)
    elif kind == GraphKind.CYCLE:
        if n < 3:
            raise PreconditionError("A cycle needs at least 3 vertices")
        graph = nx.cycle_graph(n)
    elif kind == GraphKind.PATH:
        graph = nx.path_graph(n)
    elif kind == GraphKind.STAR:
        graph = nx.star_graph(n)
    else:
        graph = nx.convert_node_labels_to_integers(nx.grid_2d_graph(n, n), ordering="sorted")
    return ColoredGraph.from_networkx(graph)


def gnm(n: int, m: int, seed: Optional[int] = None) -> ColoredGraph:
    """Uniform random graph with exactly m edges."""
    return ColoredGraph.from_networkx(nx.gnm_random_graph(n, m, seed=seed))


def hypercube(dim: int) -> ColoredGraph:
    """Q_dim with vertex i the bit vector of i; corners 0 and 2^dim - 1 are opposite."""
    graph = nx.Graph()
    graph.add_nodes_from(range(1 << dim))
    graph.add_edges_from((v, v ^ (1 << b)) for v in range(1 << dim) for b in range(dim) if v < v ^ (1 << b))
    return ColoredGraph.from_networkx(graph)
