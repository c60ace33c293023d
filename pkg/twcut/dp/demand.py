"""
Terminal-set pairs a solution must separate or keep connected.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from ..graph.colored import ColoredGraph, VertexSet, vertex_set
from ..graph.ops import is_separator

Pair = Tuple[VertexSet, VertexSet]


def _pairs(pairs: Iterable[Tuple[Iterable[int], Iterable[int]]]) -> Tuple[Pair, ...]:
    return tuple((vertex_set(x), vertex_set(y)) for x, y in pairs)


@dataclass(frozen=True)
class SeparationDemand:
    """
    Attributes:
        cut_pairs: (X, Y) pairs S must separate
        uncut_pairs: (X, Y) pairs S must leave connected
    """

    cut_pairs: Tuple[Pair, ...] = ()
    uncut_pairs: Tuple[Pair, ...] = field(default=())

    @classmethod
    def of(
        cls,
        cut_pairs: Iterable[Tuple[Iterable[int], Iterable[int]]] = (),
        uncut_pairs: Iterable[Tuple[Iterable[int], Iterable[int]]] = (),
    ) -> "SeparationDemand":
        return cls(_pairs(cut_pairs), _pairs(uncut_pairs))

    @classmethod
    def single(cls, s: int, t: int) -> "SeparationDemand":
        return cls((((s,), (t,)),))

    def check(self, g: ColoredGraph) -> None:
        """
        Raises:
            VertexRangeError: If a terminal is not a vertex of g
        """
        for x, y in self.cut_pairs + self.uncut_pairs:
            vertex_set(x, g.n)
            vertex_set(y, g.n)

    def terminal_masks(self, n: int) -> List[int]:
        """
        Terminal classes touched by each vertex.

        Cut pair i owns bits 2i (X side) and 2i + 1 (Y side); uncut pair j
        owns bits 2(c + j) and 2(c + j) + 1 where c is the cut pair count.
        """
        masks = [0] * n
        for i, (x, y) in enumerate(self.cut_pairs + self.uncut_pairs):
            for v in x:
                masks[v] |= 1 << (2 * i)
            for v in y:
                masks[v] |= 1 << (2 * i + 1)
        return masks

    def cut_masks(self) -> List[int]:
        return [0b11 << (2 * i) for i in range(len(self.cut_pairs))]

    def uncut_masks(self) -> List[int]:
        offset = len(self.cut_pairs)
        return [0b11 << (2 * (offset + j)) for j in range(len(self.uncut_pairs))]

    def satisfied_by(self, g: ColoredGraph, s: Sequence[int]) -> bool:
        """Check S directly: every cut pair separated, no uncut pair separated."""
        return all(is_separator(g, s, x, y) for x, y in self.cut_pairs) and not any(
            is_separator(g, s, x, y) for x, y in self.uncut_pairs
        )
