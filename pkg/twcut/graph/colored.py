"""
Undirected simple graphs with vertex labels and black/red edge colors.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..errors import PreconditionError, VertexRangeError

# origin marker of vertices with no counterpart in the parent graph
SUBDIVISION = -1

VertexSet = Tuple[int, ...]
Edge = Tuple[int, int]


class EdgeColor(str, Enum):
    """Edge colors: original edges are black, torso-introduced edges red."""
    BLACK = "black"
    RED = "red"


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def vertex_set(vertices: Iterable[int], n: Optional[int] = None) -> VertexSet:
    """
    Normalize an iterable of vertex ids into a VertexSet.

    Args:
        vertices: Vertex ids, duplicates allowed
        n: Vertex count of the host graph, enables range checking

    Returns:
        Sorted duplicate-free tuple

    Raises:
        VertexRangeError: If n is given and an id is outside 0..n-1
    """
    result = tuple(sorted(set(vertices)))
    if n is not None:
        for v in result:
            if v < 0 or v >= n:
                raise VertexRangeError(v, n)
    return result


@dataclass(frozen=True)
class ColoredGraph:
    """
    Immutable undirected simple graph on vertices 0..n-1.

    Attributes:
        n: Vertex count
        adjacency: Neighbor set per vertex
        red: Edges (u < v) colored RED; every other edge is BLACK
        labels: Small integer label per vertex
        origin: Id of each vertex in the graph this one was derived from,
            or SUBDIVISION for vertices without a counterpart
    """

    n: int
    adjacency: Tuple[FrozenSet[int], ...]
    red: FrozenSet[Edge] = frozenset()
    labels: Tuple[int, ...] = ()
    origin: Tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise PreconditionError(f"adjacency has {len(self.adjacency)} rows for {self.n} vertices")
        if not self.labels:
            object.__setattr__(self, "labels", (0,) * self.n)
        if not self.origin:
            object.__setattr__(self, "origin", tuple(range(self.n)))
        if len(self.labels) != self.n or len(self.origin) != self.n:
            raise PreconditionError("labels and origin must have one entry per vertex")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Edge] = (),
        red_edges: Iterable[Edge] = (),
        labels: Optional[Sequence[int]] = None,
        origin: Optional[Sequence[int]] = None,
    ) -> "ColoredGraph":
        """
        Build a graph from edge lists.

        Args:
            n: Vertex count
            edges: Black edges
            red_edges: Red edges; an edge listed in both lists is black
            labels: Vertex labels (default all 0)
            origin: Origin ids (default identity)

        Returns:
            The graph

        Raises:
            VertexRangeError: If an endpoint is out of range
            PreconditionError: On self-loops
        """
        adj: List[set] = [set() for _ in range(n)]
        black = set()
        red = set()
        for bucket, source in ((black, edges), (red, red_edges)):
            for u, v in source:
                for x in (u, v):
                    if x < 0 or x >= n:
                        raise VertexRangeError(x, n)
                if u == v:
                    raise PreconditionError(f"Self-loop at vertex {u} is not allowed")
                adj[u].add(v)
                adj[v].add(u)
                bucket.add(edge_key(u, v))
        return cls(
            n=n,
            adjacency=tuple(frozenset(a) for a in adj),
            red=frozenset(red - black),
            labels=tuple(labels) if labels is not None else (0,) * n,
            origin=tuple(origin) if origin is not None else tuple(range(n)),
        )

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "ColoredGraph":
        """
        Convert a networkx graph; nodes are renumbered in sorted order.

        Node attribute ``label`` and edge attribute ``color`` are honored.
        """
        nodes = sorted(graph.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        black, red = [], []
        for u, v, data in graph.edges(data=True):
            if u == v:
                continue
            target = red if data.get("color") == EdgeColor.RED.value else black
            target.append((index[u], index[v]))
        labels = [int(graph.nodes[v].get("label", 0)) for v in nodes]
        return cls.from_edges(len(nodes), black, red, labels)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @cached_property
    def sorted_neighbors(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(sorted(a)) for a in self.adjacency)

    @cached_property
    def black_adjacency(self) -> Tuple[FrozenSet[int], ...]:
        if not self.red:
            return self.adjacency
        rows = [set(a) for a in self.adjacency]
        for u, v in self.red:
            rows[u].discard(v)
            rows[v].discard(u)
        return tuple(frozenset(r) for r in rows)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.sorted_neighbors[v]

    def black_neighbors(self, v: int) -> FrozenSet[int]:
        return self.black_adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def color(self, u: int, v: int) -> EdgeColor:
        """
        Get the color of edge uv.

        Raises:
            PreconditionError: If uv is not an edge
        """
        if not self.has_edge(u, v):
            raise PreconditionError(f"({u}, {v}) is not an edge")
        return EdgeColor.RED if edge_key(u, v) in self.red else EdgeColor.BLACK

    def edges(self) -> List[Edge]:
        """All edges (u < v), sorted."""
        return [(u, v) for u in range(self.n) for v in self.sorted_neighbors[u] if u < v]

    def black_edges(self) -> List[Edge]:
        return [e for e in self.edges() if e not in self.red]

    def red_edges(self) -> List[Edge]:
        return sorted(self.red)

    def check_vertex(self, v: int) -> int:
        if v < 0 or v >= self.n:
            raise VertexRangeError(v, self.n)
        return v

    def neighborhood(self, vertices: Iterable[int]) -> VertexSet:
        """Open neighborhood N(X) = union of neighbors of X, minus X."""
        inside = set(vertices)
        result = set()
        for v in inside:
            result.update(self.adjacency[v])
        return tuple(sorted(result - inside))

    def induced(self, vertices: Iterable[int]) -> "ColoredGraph":
        """
        Induced subgraph, renumbered in increasing id order.

        Returns:
            Subgraph whose origin maps back to ids of this graph
        """
        keep = vertex_set(vertices, self.n)
        index = {v: i for i, v in enumerate(keep)}
        adj = tuple(frozenset(index[u] for u in self.adjacency[v] if u in index) for v in keep)
        red = frozenset(
            edge_key(index[u], index[v]) for u, v in self.red if u in index and v in index
        )
        return ColoredGraph(
            n=len(keep),
            adjacency=adj,
            red=red,
            labels=tuple(self.labels[v] for v in keep),
            origin=keep,
        )

    def remove(self, vertices: Iterable[int]) -> "ColoredGraph":
        """Graph minus a vertex set (G \\ S)."""
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def components(self, exclude: Iterable[int] = ()) -> List[VertexSet]:
        """
        Connected components of the graph minus ``exclude``.

        Returns:
            Components as VertexSets, ordered by smallest vertex
        """
        blocked = set(exclude)
        view = self._structure.subgraph(v for v in range(self.n) if v not in blocked)
        return sorted(tuple(sorted(comp)) for comp in nx.connected_components(view))

    @cached_property
    def _structure(self) -> nx.Graph:
        # shared by components(); never handed out, so never mutated
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def with_labels(self, labels: Sequence[int]) -> "ColoredGraph":
        return ColoredGraph(self.n, self.adjacency, self.red, tuple(labels), self.origin)

    def is_bipartite(self) -> bool:
        from .ops import bipartite_2coloring

        return bipartite_2coloring(self, include_red=True) is not None

    def to_networkx(self) -> nx.Graph:
        """Convert to networkx with ``label`` node and ``color`` edge attributes."""
        graph = nx.Graph()
        for v in range(self.n):
            graph.add_node(v, label=self.labels[v])
        for u, v in self.edges():
            color = EdgeColor.RED if (u, v) in self.red else EdgeColor.BLACK
            graph.add_edge(u, v, color=color.value)
        return graph

    def same_structure(self, other: "ColoredGraph") -> bool:
        """Equal vertex count, edges, colors and labels (origins ignored)."""
        return (
            self.n == other.n
            and self.adjacency == other.adjacency
            and self.red == other.red
            and self.labels == other.labels
        )
