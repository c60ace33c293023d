"""
Nice tree decompositions (leaf / introduce / forget / join).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..errors import DecompositionError
from .tree import TreeDecomposition


class NodeKind(str, Enum):
    LEAF = "leaf"
    INTRODUCE = "introduce"
    FORGET = "forget"
    JOIN = "join"


@dataclass(frozen=True)
class NiceNode:
    kind: NodeKind
    bag: FrozenSet[int]
    vertex: Optional[int] = None
    children: Tuple[int, ...] = ()


@dataclass(frozen=True)
class NiceDecomposition:
    """
    Rooted nice decomposition stored in post-order.

    Children always precede their parent, the root is the last node and has
    an empty bag, leaves have empty bags.
    """

    nodes: Tuple[NiceNode, ...]

    @property
    def root(self) -> int:
        return len(self.nodes) - 1

    @property
    def width(self) -> int:
        return max((len(node.bag) for node in self.nodes), default=0) - 1

    def as_tree(self) -> TreeDecomposition:
        edges = tuple((child, i) for i, node in enumerate(self.nodes) for child in node.children)
        return TreeDecomposition(bags=tuple(node.bag for node in self.nodes), edges=edges)


class _Builder:
    def __init__(self):
        self.nodes: List[NiceNode] = []

    def add(self, kind: NodeKind, bag: FrozenSet[int], vertex: Optional[int] = None, children: Tuple[int, ...] = ()) -> int:
        self.nodes.append(NiceNode(kind, bag, vertex, children))
        return len(self.nodes) - 1

    def transition(self, top: int, source: FrozenSet[int], target: FrozenSet[int]) -> int:
        bag = set(source)
        for v in sorted(source - target):
            bag.discard(v)
            top = self.add(NodeKind.FORGET, frozenset(bag), v, (top,))
        for v in sorted(target - source):
            bag.add(v)
            top = self.add(NodeKind.INTRODUCE, frozenset(bag), v, (top,))
        return top


def make_nice(td: TreeDecomposition, root: int = 0) -> NiceDecomposition:
    """
    Normalize a tree decomposition.

    Every child bag is first shrunk by forgets, then grown by introduces to
    its parent bag, so no intermediate bag is larger than the bags it lies
    between; nodes with several children become chains of binary joins.

    Args:
        td: Tree decomposition (its tree structure is checked)
        root: Bag index to root the tree at

    Returns:
        NiceDecomposition of the same width

    Raises:
        DecompositionError: If the bags do not form a tree
    """
    count = len(td.bags)
    if count == 0 or len(td.edges) != count - 1 or not 0 <= root < count:
        raise DecompositionError("Invalid tree decomposition (tree: malformed bag tree)")
    adj = td.neighbors()
    parent: Dict[int, int] = {root: -1}
    order: List[int] = []
    stack = [root]
    while stack:
        i = stack.pop()
        order.append(i)
        for j in adj[i]:
            if j not in parent:
                parent[j] = i
                stack.append(j)
    if len(order) != count:
        raise DecompositionError("Invalid tree decomposition (tree: bag graph is not connected)")

    builder = _Builder()
    top: Dict[int, int] = {}
    for i in reversed(order):
        bag = td.bags[i]
        chains = [
            builder.transition(top[j], td.bags[j], bag)
            for j in adj[i]
            if parent.get(j) == i
        ]
        if not chains:
            current = builder.transition(builder.add(NodeKind.LEAF, frozenset()), frozenset(), bag)
        else:
            current = chains[0]
            for other in chains[1:]:
                current = builder.add(NodeKind.JOIN, bag, None, (current, other))
        top[i] = current
    builder.transition(top[root], td.bags[root], frozenset())
    return NiceDecomposition(nodes=tuple(builder.nodes))
