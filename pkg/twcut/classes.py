"""
Builtin graph classes and class loading for the constrained solvers.

A class is decided on canonical graphs. Classes are hereditary (closed under
induced subgraphs); the edge-bipartization classes are also closed under
subgraphs.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, FrozenSet, Iterable, Optional, Union

import networkx as nx
from loguru import logger

from .dp.constraints import ConstraintSpec
from .errors import GraphFormatError, PreconditionError
from .graph.canonical import CanonicalGraph, canonicalize, check_hereditary
from .graph.colored import ColoredGraph

ClassOracle = Callable[[CanonicalGraph], bool]


@dataclass(frozen=True)
class GraphClass:
    """
    A hereditary graph class.

    Attributes:
        name: Display name (also accepted by ``resolve_class``)
        oracle: Membership test on canonical graphs
        members: Explicit member set, used instead of compiling the oracle
        labeled: Members carry vertex labels that must match the host labels
        universal: Every graph is a member
    """

    name: str
    oracle: ClassOracle
    members: Optional[FrozenSet[CanonicalGraph]] = None
    labeled: bool = False
    universal: bool = False

    def contains(self, graph: CanonicalGraph) -> bool:
        if self.universal:
            return True
        key = graph if self.labeled else graph.unlabeled()
        if self.members is not None:
            return key in self.members
        return self.oracle(key)

    def spec(self, k: int) -> ConstraintSpec:
        """
        Constraint compiled for solutions of at most k vertices.

        Raises:
            NonHereditaryClassError: If the compiled member set is not hereditary
        """
        return _compile(self, k)


@lru_cache(maxsize=128)
def _compile(graph_class: GraphClass, k: int) -> ConstraintSpec:
    if graph_class.universal:
        return ConstraintSpec.any_graph()
    if graph_class.members is not None:
        spec = ConstraintSpec.hereditary(m for m in graph_class.members if m.order <= k)
    else:
        spec = ConstraintSpec.from_oracle(graph_class.oracle, k)
    logger.debug("compiled class {} up to {} vertices: {} members", graph_class.name, k, len(spec.members or ()))
    return spec


def _always(graph: CanonicalGraph) -> bool:
    return True


def _edgeless(graph: CanonicalGraph) -> bool:
    return graph.edge_count == 0


def _clique(graph: CanonicalGraph) -> bool:
    return graph.edge_count == graph.order * (graph.order - 1) // 2


def _matching(graph: CanonicalGraph) -> bool:
    return all(graph.degree(i) <= 1 for i in range(graph.order))


def matching_number(graph: CanonicalGraph) -> int:
    return len(nx.max_weight_matching(graph.to_networkx(), maxcardinality=True))


def graph_rank(graph: CanonicalGraph) -> int:
    """Edges in a spanning forest: order minus component count."""
    return graph.order - graph.components()


ALL_GRAPHS = GraphClass("all", _always, universal=True)
EDGELESS = GraphClass("edgeless", _edgeless)
CLIQUE = GraphClass("clique", _clique)
MATCHING = GraphClass("matching", _matching)


@lru_cache(maxsize=None)
def max_deficiency(j: int) -> GraphClass:
    """Graphs with |V| minus the matching number at most j."""
    return GraphClass(f"max-deficiency-{j}", lambda graph: graph.order - matching_number(graph) <= j)


@lru_cache(maxsize=None)
def rank(j: int) -> GraphClass:
    """Graphs whose spanning forests have at most j edges."""
    return GraphClass(f"rank-{j}", lambda graph: graph_rank(graph) <= j)


def from_graphs(name: str, graphs: Iterable[ColoredGraph]) -> GraphClass:
    """
    Explicit class from listed member graphs.

    Raises:
        NonHereditaryClassError: If the list is not closed under vertex deletion
    """
    members = check_hereditary(canonicalize(g.with_labels([0] * g.n)) for g in graphs)
    return GraphClass(name, lambda graph: graph in members, members=members)


def from_file(path: Union[str, Path]) -> GraphClass:
    """
    Load a class from a graph6 file, one member per line.

    Raises:
        GraphFormatError: On unreadable files or invalid graph6 lines
        NonHereditaryClassError: If the members are not closed under vertex deletion
    """
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise GraphFormatError(f"Cannot read class file {path}: {e}") from e
    graphs = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            graphs.append(ColoredGraph.from_networkx(nx.from_graph6_bytes(line.encode("ascii"))))
        except (nx.NetworkXError, ValueError) as e:
            raise GraphFormatError(f"{path}:{line_no}: invalid graph6 line: {e}") from e
    return from_graphs(Path(path).stem, graphs)


_NAMED = {
    "all": ALL_GRAPHS,
    "any": ALL_GRAPHS,
    "edgeless": EDGELESS,
    "stable": EDGELESS,
    "clique": CLIQUE,
    "matching": MATCHING,
}

_PARAMETRIC = re.compile(r"^(rank|max-deficiency|deficiency)-(\d+)$")


def resolve_class(name: str) -> GraphClass:
    """
    Resolve a class name or a graph6 file path.

    Accepted names: all (any), edgeless (stable), clique, matching, rank-<j>,
    max-deficiency-<j> (alias deficiency-<j>).

    Raises:
        PreconditionError: On unknown names
    """
    key = name.strip().lower()
    if key in _NAMED:
        return _NAMED[key]
    match = _PARAMETRIC.match(key)
    if match:
        j = int(match.group(2))
        return rank(j) if match.group(1) == "rank" else max_deficiency(j)
    if Path(name).is_file():
        return from_file(name)
    raise PreconditionError(f"Unknown graph class '{name}'")
