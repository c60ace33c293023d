"""
Dynamic programming over nice tree decompositions for constrained separators.

A state at a node describes how a partial solution S looks from the bag:
which bag vertices are in S, how the remaining bag vertices are connected in
the processed part of g minus S (with the terminal classes each component has
touched), which uncut pairs already have a connecting component, and the
constraint-specific summary of the chosen vertices. Per state only the best
partial solution is kept, ordered by size and then lexicographically.
"""

from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from ..config import get_settings
from ..decomposition.nice import NiceDecomposition, NodeKind
from ..decomposition.tree import require_valid
from ..errors import DecompositionError
from ..graph.colored import ColoredGraph, VertexSet, vertex_set
from ..logger import current_stats
from .constraints import ConstraintKind, ConstraintSpec
from .demand import SeparationDemand
from .sketch import EMPTY_SKETCH, sketch_add, sketch_admitted, sketch_forget, sketch_join

Block = Tuple[VertexSet, int]
Groups = Tuple[VertexSet, ...]


@dataclass(frozen=True)
class DpState:
    """
    Attributes:
        chosen: Bag vertices in S
        blocks: Components of (processed part minus S) restricted to the bag,
            each with the terminal classes it has touched
        satisfied: Uncut-pair bits already witnessed by one component
        extra: Sketch (HEREDITARY), (groups, closed) (CONNECTED_BLACK) or () (ANY)
    """

    chosen: VertexSet
    blocks: Tuple[Block, ...]
    satisfied: int
    extra: Any


Table = Dict[DpState, VertexSet]


def _better(a: VertexSet, b: VertexSet) -> bool:
    return (len(a), a) < (len(b), b)


def _store(table: Table, state: DpState, value: VertexSet) -> None:
    current = table.get(state)
    if current is None or _better(value, current):
        table[state] = value


def _merge_groups(groups: Iterable[Iterable[int]]) -> Groups:
    parent: Dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for group in groups:
        members = list(group)
        for v in members:
            parent.setdefault(v, v)
        for v in members[1:]:
            a, b = find(members[0]), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)
    out: Dict[int, List[int]] = {}
    for v in parent:
        out.setdefault(find(v), []).append(v)
    return tuple(sorted(tuple(sorted(vs)) for vs in out.values()))


class _Solver:
    def __init__(
        self,
        g: ColoredGraph,
        demand: SeparationDemand,
        k: int,
        spec: ConstraintSpec,
        forbidden: FrozenSet[int],
    ):
        self.g = g
        self.k = k
        self.spec = spec
        self.forbidden = forbidden
        self.terminals = demand.terminal_masks(g.n)
        self.cut_masks = demand.cut_masks()
        self.uncut_masks = demand.uncut_masks()
        self.all_uncut = 0
        for m in self.uncut_masks:
            self.all_uncut |= m
        self.debug = get_settings().debug_checks

    def violates(self, mask: int) -> bool:
        return any(mask & cm == cm for cm in self.cut_masks)

    def witnessed(self, mask: int) -> int:
        found = 0
        for um in self.uncut_masks:
            if mask & um == um:
                found |= um
        return found

    def initial_extra(self) -> Any:
        if self.spec.kind == ConstraintKind.HEREDITARY:
            return EMPTY_SKETCH
        if self.spec.kind == ConstraintKind.CONNECTED_BLACK:
            return ((), False)
        return ()

    def leaf(self) -> Table:
        return {DpState((), (), 0, self.initial_extra()): ()}

    def introduce(self, table: Table, v: int) -> Table:
        out: Table = {}
        adjacency = self.g.adjacency[v]
        black = self.g.black_adjacency[v]
        for state, value in table.items():
            kept: List[Block] = []
            verts = [v]
            mask = self.terminals[v]
            for block_verts, block_mask in state.blocks:
                if any(u in adjacency for u in block_verts):
                    verts.extend(block_verts)
                    mask |= block_mask
                else:
                    kept.append((block_verts, block_mask))
            if not self.violates(mask):
                kept.append((tuple(sorted(verts)), mask))
                _store(
                    out,
                    DpState(state.chosen, tuple(sorted(kept)), state.satisfied | self.witnessed(mask), state.extra),
                    value,
                )

            if v in self.forbidden or len(value) >= self.k:
                continue
            extra = self._introduce_chosen(state, v, black)
            if extra is None:
                continue
            chosen = tuple(sorted(state.chosen + (v,)))
            _store(out, DpState(chosen, state.blocks, state.satisfied, extra), tuple(sorted(value + (v,))))
        return out

    def _introduce_chosen(self, state: DpState, v: int, black: FrozenSet[int]) -> Any:
        kind = self.spec.kind
        if kind == ConstraintKind.ANY:
            return state.extra
        nbrs = [u for u in state.chosen if u in black]
        if kind == ConstraintKind.HEREDITARY:
            sketch = sketch_add(state.extra, v, self.g.labels[v], nbrs)
            if not sketch_admitted(self.spec.members, sketch):
                return None
            return sketch
        groups, closed = state.extra
        if closed:
            return None
        joined = [v]
        rest = []
        for group in groups:
            if any(u in black for u in group):
                joined.extend(group)
            else:
                rest.append(group)
        rest.append(tuple(sorted(joined)))
        return (tuple(sorted(rest)), False)

    def forget(self, table: Table, v: int) -> Table:
        out: Table = {}
        for state, value in table.items():
            if v in state.chosen:
                extra = self._forget_chosen(state, v)
                if extra is None:
                    continue
                chosen = tuple(u for u in state.chosen if u != v)
                _store(out, DpState(chosen, state.blocks, state.satisfied, extra), value)
                continue
            blocks = []
            for block_verts, block_mask in state.blocks:
                if v in block_verts:
                    remaining = tuple(u for u in block_verts if u != v)
                    if remaining:
                        blocks.append((remaining, block_mask))
                else:
                    blocks.append((block_verts, block_mask))
            _store(out, DpState(state.chosen, tuple(sorted(blocks)), state.satisfied, state.extra), value)
        return out

    def _forget_chosen(self, state: DpState, v: int) -> Any:
        kind = self.spec.kind
        if kind == ConstraintKind.ANY:
            return state.extra
        if kind == ConstraintKind.HEREDITARY:
            return sketch_forget(state.extra, v)
        groups, closed = state.extra
        others = []
        remaining: VertexSet = ()
        for group in groups:
            if v in group:
                remaining = tuple(u for u in group if u != v)
            else:
                others.append(group)
        if remaining:
            others.append(remaining)
            return (tuple(sorted(others)), closed)
        # the last bag vertex of a chosen component leaves: it must be the only one
        if others or closed:
            return None
        return ((), True)

    def join(self, left: Table, right: Table, bag: FrozenSet[int]) -> Table:
        out: Table = {}
        by_chosen: Dict[VertexSet, List[Tuple[DpState, VertexSet]]] = {}
        for state, value in right.items():
            by_chosen.setdefault(state.chosen, []).append((state, value))
        for ls, lv in left.items():
            for rs, rv in by_chosen.get(ls.chosen, ()):
                value = tuple(sorted(set(lv) | set(rv)))
                if len(value) > self.k:
                    continue
                if self.debug:
                    self._check_join(lv, rv, bag)
                merged = self._join_blocks(ls.blocks, rs.blocks)
                if merged is None:
                    continue
                blocks, witnessed = merged
                extra = self._join_extra(ls.extra, rs.extra)
                if extra is None:
                    continue
                _store(out, DpState(ls.chosen, blocks, ls.satisfied | rs.satisfied | witnessed, extra), value)
        return out

    def _join_blocks(self, left: Sequence[Block], right: Sequence[Block]) -> Optional[Tuple[Tuple[Block, ...], int]]:
        groups = _merge_groups([verts for verts, _ in left] + [verts for verts, _ in right])
        owner = {v: i for i, group in enumerate(groups) for v in group}
        masks = [0] * len(groups)
        for verts, mask in list(left) + list(right):
            masks[owner[verts[0]]] |= mask
        witnessed = 0
        for mask in masks:
            if self.violates(mask):
                return None
            witnessed |= self.witnessed(mask)
        return tuple(zip(groups, masks)), witnessed

    def _join_extra(self, left: Any, right: Any) -> Any:
        kind = self.spec.kind
        if kind == ConstraintKind.ANY:
            return left
        if kind == ConstraintKind.HEREDITARY:
            sketch = sketch_join(left, right)
            if not sketch_admitted(self.spec.members, sketch):
                return None
            return sketch
        (lg, lc), (rg, rc) = left, right
        if lc and rc:
            return None
        return (_merge_groups(list(lg) + list(rg)), lc or rc)

    def _check_join(self, lv: VertexSet, rv: VertexSet, bag: FrozenSet[int]) -> None:
        lf = set(lv) - bag
        rf = set(rv) - bag
        assert not lf & rf, "branches forgot a shared chosen vertex"
        for u in lf:
            assert not self.g.black_adjacency[u] & rf, "black edge between forgotten vertices of two branches"

    def accept(self, state: DpState) -> bool:
        if state.satisfied & self.all_uncut != self.all_uncut:
            return False
        if self.spec.kind == ConstraintKind.HEREDITARY:
            return sketch_admitted(self.spec.members, state.extra)
        return True


def solve(
    g: ColoredGraph,
    nice: NiceDecomposition,
    demand: SeparationDemand,
    k: int,
    spec: ConstraintSpec,
    forbidden: Iterable[int] = (),
) -> Optional[VertexSet]:
    """
    Find the best vertex set S meeting a separation demand and a constraint.

    S avoids the forbidden vertices, has at most k vertices, separates every
    cut pair, leaves every uncut pair connected and its black-induced
    subgraph satisfies the constraint.

    Args:
        g: Host graph (red edges count for connectivity, not for the constraint)
        nice: Nice decomposition of g
        demand: Cut and uncut pairs
        k: Size bound
        spec: Constraint on the black-induced subgraph of S
        forbidden: Vertices that may not enter S

    Returns:
        Minimum-size, lexicographically smallest S, or None if infeasible

    Raises:
        DecompositionError: If nice is not a decomposition of g
    """
    require_valid(g, nice.as_tree())
    demand.check(g)
    blocked = frozenset(vertex_set(forbidden, g.n))
    if spec.kind == ConstraintKind.HEREDITARY and not spec.members:
        return None

    solver = _Solver(g, demand, k, spec, blocked)
    tables: List[Optional[Table]] = []
    total = 0
    for node in nice.nodes:
        if node.kind == NodeKind.LEAF:
            table = solver.leaf()
        elif node.kind == NodeKind.INTRODUCE:
            table = solver.introduce(tables[node.children[0]], node.vertex)
        elif node.kind == NodeKind.FORGET:
            table = solver.forget(tables[node.children[0]], node.vertex)
        elif node.kind == NodeKind.JOIN:
            a, b = node.children
            table = solver.join(tables[a], tables[b], node.bag)
        else:
            raise DecompositionError(f"Unknown nice node kind {node.kind}")
        for child in node.children:
            tables[child] = None
        tables.append(table)
        total += len(table)

    stats = current_stats()
    stats.note_states(total)
    stats.note_width(nice.width)
    root = nice.nodes[nice.root]
    if root.bag:
        raise DecompositionError("Invalid tree decomposition (tree: root bag of a nice decomposition must be empty)")
    best: Optional[VertexSet] = None
    for state, value in tables[-1].items():
        if solver.accept(state) and (best is None or _better(value, best)):
            best = value
    logger.debug(
        "dp over {} nodes (width {}): {} states, solution {}",
        len(nice.nodes),
        nice.width,
        total,
        "none" if best is None else len(best),
    )
    return best
