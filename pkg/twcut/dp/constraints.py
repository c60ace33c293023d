"""
Constraints on the black-induced subgraph of a solution.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, FrozenSet, Iterable, Optional

from ..graph.canonical import CanonicalGraph, check_hereditary, compile_hereditary


class ConstraintKind(str, Enum):
    ANY = "any"
    HEREDITARY = "hereditary"
    CONNECTED_BLACK = "connected-black"


@dataclass(frozen=True)
class ConstraintSpec:
    """
    What the black edges on a solution S must look like.

    Attributes:
        kind: Constraint family
        members: Canonical member graphs (HEREDITARY only), closed under
            vertex deletion and including the empty graph unless the class
            is empty
    """

    kind: ConstraintKind
    members: Optional[FrozenSet[CanonicalGraph]] = None

    @classmethod
    def any_graph(cls) -> "ConstraintSpec":
        return cls(ConstraintKind.ANY)

    @classmethod
    def connected_black(cls) -> "ConstraintSpec":
        return cls(ConstraintKind.CONNECTED_BLACK)

    @classmethod
    def hereditary(cls, members: Iterable[CanonicalGraph]) -> "ConstraintSpec":
        """
        Wrap an explicit member list.

        Raises:
            NonHereditaryClassError: If the list is not closed under vertex deletion
        """
        return cls(ConstraintKind.HEREDITARY, check_hereditary(members))

    @classmethod
    def from_oracle(cls, oracle: Callable[[CanonicalGraph], bool], k: int) -> "ConstraintSpec":
        """
        Compile a class oracle into its members with at most k vertices.

        Raises:
            NonHereditaryClassError: If the compiled set is not hereditary
        """
        return cls(ConstraintKind.HEREDITARY, compile_hereditary(oracle, k))

    def admits(self, graph: CanonicalGraph) -> bool:
        """Membership of a complete black-induced solution graph."""
        if self.kind != ConstraintKind.HEREDITARY:
            return True
        assert self.members is not None
        return graph in self.members
