"""
List (H, C, <=K)-coloring where H minus C is a single loopless edge bw.

A coloring maps G to H honoring lists; the vertices mapped into C form the
exceptional set, and at most K(c) vertices may be mapped to each c in C.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple, Union

from loguru import logger
from pydantic import BaseModel, Field, ValidationError, field_validator

from ..decomposition.nice import NiceDecomposition, NodeKind, make_nice
from ..decomposition.tree import decompose, require_valid
from ..errors import GraphFormatError, PreconditionError, SeparatorBoundError
from ..graph.colored import ColoredGraph, VertexSet
from ..graph.ops import bipartite_2coloring, is_separator
from ..logger import current_stats
from ..reduction.sets import cover_set_separators
from .bipartization import oct, separation_sets

Lists = Tuple[FrozenSet[int], ...]


class TargetGraph(BaseModel):
    """Target graph H of an hck document."""

    vertices: List[str]
    edges: List[Tuple[str, str]] = Field(default_factory=list)
    loops: List[str] = Field(default_factory=list)

    @field_validator("vertices", mode="before")
    @classmethod
    def stringify_vertices(cls, v):
        """Accept numeric vertex names."""
        return [str(x) for x in v]

    @field_validator("edges", mode="before")
    @classmethod
    def stringify_edges(cls, v):
        return [tuple(str(x) for x in e) for e in v]

    @field_validator("loops", mode="before")
    @classmethod
    def stringify_loops(cls, v):
        return [str(x) for x in v]


class HckDocument(BaseModel):
    """
    Target, caps and lists as read from JSON.

    ``lists`` is keyed by 1-based vertex ids of G; vertices without a list
    may take any vertex of H.
    """

    H: TargetGraph
    C: List[str] = Field(default_factory=list)
    K: Dict[str, int] = Field(default_factory=dict)
    lists: Dict[int, List[str]] = Field(default_factory=dict)

    @field_validator("C", mode="before")
    @classmethod
    def stringify_constrained(cls, v):
        return [str(x) for x in v]

    @field_validator("K", mode="before")
    @classmethod
    def stringify_caps(cls, v):
        return {str(key): value for key, value in dict(v).items()}

    @field_validator("lists", mode="before")
    @classmethod
    def stringify_lists(cls, v):
        return {int(key): [str(x) for x in value] for key, value in dict(v).items()}

    @classmethod
    def load(cls, path: Union[str, Path]) -> "HckDocument":
        """
        Raises:
            GraphFormatError: On unreadable or invalid documents
        """
        try:
            return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))
        except OSError as e:
            raise GraphFormatError(f"Cannot read target document {path}: {e}") from e
        except ValidationError as e:
            raise GraphFormatError(f"Invalid target document {path}: {e}") from e

    def target(self) -> "HomTarget":
        return HomTarget.from_document(self)

    def list_assignment(self, target: "HomTarget", n: int) -> Lists:
        """
        Per-vertex lists as H indices.

        Raises:
            PreconditionError: On unknown H vertices or out-of-range ids
        """
        full = frozenset(range(len(target.names)))
        out = [full] * n
        for vertex, names in self.lists.items():
            if not 1 <= vertex <= n:
                raise PreconditionError(f"List given for vertex {vertex}, graph has {n} vertices")
            out[vertex - 1] = frozenset(target.index(name) for name in names)
        return tuple(out)


@dataclass(frozen=True)
class HomTarget:
    """
    Attributes:
        names: Vertex names of H
        adjacency: Neighbors per H vertex (a loop puts a vertex in its own row)
        constrained: C as H indices
        caps: K per H vertex (0 outside C)
        b: First vertex of H minus C
        w: Second vertex of H minus C
    """

    names: Tuple[str, ...]
    adjacency: Tuple[FrozenSet[int], ...]
    constrained: FrozenSet[int]
    caps: Tuple[int, ...]
    b: int
    w: int

    @classmethod
    def from_document(cls, doc: HckDocument) -> "HomTarget":
        """
        Raises:
            PreconditionError: If H minus C is not a single loopless edge or
                the document names unknown vertices
        """
        names = tuple(doc.H.vertices)
        if len(set(names)) != len(names):
            raise PreconditionError("H has duplicate vertex names")
        index = {name: i for i, name in enumerate(names)}

        def lookup(name: str) -> int:
            if name not in index:
                raise PreconditionError(f"Unknown H vertex '{name}'")
            return index[name]

        rows: List[Set[int]] = [set() for _ in names]
        for u, v in doc.H.edges:
            a, b = lookup(u), lookup(v)
            rows[a].add(b)
            rows[b].add(a)
        for v in doc.H.loops:
            a = lookup(v)
            rows[a].add(a)
        constrained = frozenset(lookup(c) for c in doc.C)
        caps = [0] * len(names)
        for name, cap in doc.K.items():
            c = lookup(name)
            if c not in constrained:
                raise PreconditionError(f"Cap given for '{name}', which is not in C")
            if cap < 0:
                raise PreconditionError(f"Cap of '{name}' must be nonnegative")
            caps[c] = cap
        free = [i for i in range(len(names)) if i not in constrained]
        if len(free) != 2:
            raise PreconditionError("H minus C must have exactly two vertices")
        b, w = free
        if w not in rows[b] or b in rows[b] or w in rows[w]:
            raise PreconditionError("H minus C must be a single edge without loops")
        return cls(names, tuple(frozenset(r) for r in rows), constrained, tuple(caps), b, w)

    def index(self, name: str) -> int:
        try:
            return self.names.index(str(name))
        except ValueError:
            raise PreconditionError(f"Unknown H vertex '{name}'") from None

    @property
    def k(self) -> int:
        return sum(self.caps[c] for c in self.constrained)

    def with_caps(self, caps: Sequence[int]) -> "HomTarget":
        return HomTarget(self.names, self.adjacency, self.constrained, tuple(caps), self.b, self.w)

    def compatible(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]


@dataclass(frozen=True)
class Coloring:
    """
    Attributes:
        assignment: H index of every vertex of G
    """

    assignment: Tuple[int, ...]

    def exceptional(self, target: HomTarget) -> VertexSet:
        return tuple(v for v, c in enumerate(self.assignment) if c in target.constrained)

    def named(self, target: HomTarget) -> List[str]:
        return [target.names[c] for c in self.assignment]


def verify_coloring(g: ColoredGraph, target: HomTarget, lists: Lists, coloring: Coloring) -> bool:
    """Homomorphism on every edge, list membership and caps."""
    theta = coloring.assignment
    if len(theta) != g.n:
        return False
    if any(theta[v] not in lists[v] for v in range(g.n)):
        return False
    if any(not target.compatible(theta[u], theta[v]) for u, v in g.edges()):
        return False
    counts = [0] * len(target.names)
    for c in theta:
        counts[c] += 1
    return all(counts[c] <= target.caps[c] for c in target.constrained)


def _check_lists(g: ColoredGraph, target: HomTarget, lists: Lists) -> None:
    if len(lists) != g.n:
        raise PreconditionError(f"Expected {g.n} lists, got {len(lists)}")
    for row in lists:
        if any(not 0 <= c < len(target.names) for c in row):
            raise PreconditionError("List refers to a vertex outside H")


def _partial_colorings(
    g: ColoredGraph, vertices: VertexSet, target: HomTarget, lists: Lists, caps: Sequence[int]
) -> Iterator[Dict[int, int]]:
    """Homomorphisms of G[vertices] honoring lists and caps, by backtracking."""
    order = list(vertices)
    counts = [0] * len(target.names)
    current: Dict[int, int] = {}

    def extend(i: int) -> Iterator[Dict[int, int]]:
        if i == len(order):
            yield dict(current)
            return
        v = order[i]
        for c in sorted(lists[v]):
            if c in target.constrained and counts[c] >= caps[c]:
                continue
            if any(u in current and not target.compatible(c, current[u]) for u in g.adjacency[v]):
                continue
            current[v] = c
            counts[c] += 1
            yield from extend(i + 1)
            counts[c] -= 1
            del current[v]

    yield from extend(0)


def _restricted_lists(g: ColoredGraph, target: HomTarget, lists: Lists, fixed: Dict[int, int]) -> Lists:
    out = []
    for v in range(g.n):
        allowed = set(lists[v])
        for u in g.adjacency[v]:
            if u in fixed:
                allowed &= target.adjacency[fixed[u]]
        out.append(frozenset(allowed))
    return tuple(out)


def hck_reduce_bipartite(g: ColoredGraph, target: HomTarget, lists: Lists, k: int) -> VertexSet:
    """
    A set containing the exceptional set of every minimal coloring.

    Args:
        g: Bipartite graph
        target: Target (caps enter only through the budget k)
        lists: Per-vertex lists
        k: Budget on the exceptional set

    Returns:
        C'' as a sorted VertexSet

    Raises:
        PreconditionError: If g is not bipartite
    """
    _check_lists(g, target, lists)
    if bipartite_2coloring(g, include_red=True) is None:
        raise PreconditionError("hck_reduce_bipartite needs a bipartite graph")
    memo: Dict[Tuple[Tuple[FrozenSet[int], ...], Lists, int], VertexSet] = {}
    result = _reduce(g, target, lists, k, memo)
    logger.debug("hck reduction: {} of {} vertices kept ({} memoized calls)", len(result), g.n, len(memo))
    return result


def _reduce(
    g: ColoredGraph,
    target: HomTarget,
    lists: Lists,
    k: int,
    memo: Dict[Tuple[Tuple[FrozenSet[int], ...], Lists, int], VertexSet],
) -> VertexSet:
    if k <= 0 or g.n == 0:
        return ()
    key = (g.adjacency, lists, k)
    if key in memo:
        return memo[key]
    coloring = bipartite_2coloring(g, include_red=True)
    assert coloring is not None
    must_black = tuple(v for v in range(g.n) if target.w not in lists[v])
    must_white = tuple(v for v in range(g.n) if target.b not in lists[v])
    x, y = separation_sets(g, coloring, must_black, must_white)
    if not x or not y or is_separator(g, (), x, y):
        memo[key] = ()
        return ()
    try:
        cover = cover_set_separators(g, x, y, k)
    except SeparatorBoundError:
        memo[key] = ()
        return ()
    result: Set[int] = set(cover)
    sub_caps = [target.caps[c] for c in range(len(target.names))]
    for comp in g.components(exclude=cover):
        nbrs = g.neighborhood(comp)
        part = g.induced(comp)
        for fixed in _partial_colorings(g, nbrs, target, lists, sub_caps):
            restricted = _restricted_lists(g, target, lists, fixed)
            sub_lists = tuple(restricted[v] for v in comp)
            for budget in range(k):
                inner = _reduce(part, target, sub_lists, budget, memo)
                result.update(comp[v] for v in inner)
    out = tuple(sorted(result))
    memo[key] = out
    return out


def hck_solve_bounded(
    g: ColoredGraph,
    target: HomTarget,
    lists: Lists,
    k: int,
    nice: NiceDecomposition,
) -> Optional[Coloring]:
    """
    Lexicographically least coloring by dynamic programming over a nice decomposition.

    A state is the coloring of the bag plus the number of forgotten vertices
    mapped to each vertex of C; the best partial coloring is kept per state.

    Args:
        g: Graph
        target: Target with caps
        lists: Per-vertex lists
        k: Bound on the exceptional set
        nice: Nice decomposition of g

    Returns:
        Coloring or None

    Raises:
        DecompositionError: If nice is not a decomposition of g
    """
    require_valid(g, nice.as_tree())
    _check_lists(g, target, lists)
    if any(not row for row in lists):
        return None
    slots = sorted(target.constrained)
    slot = {c: i for i, c in enumerate(slots)}
    caps = [target.caps[c] for c in slots]
    Table = Dict[Tuple[Tuple[Tuple[int, int], ...], Tuple[int, ...]], Tuple[Tuple[int, int], ...]]
    tables: List[Optional[Table]] = []
    total = 0

    def store(table: Table, key, value) -> None:
        current = table.get(key)
        if current is None or value < current:
            table[key] = value

    for node in nice.nodes:
        out: Table = {}
        if node.kind == NodeKind.LEAF:
            out[((), (0,) * len(slots))] = ()
        elif node.kind == NodeKind.INTRODUCE:
            v = node.vertex
            for (bag, counts), value in tables[node.children[0]].items():
                colors = dict(bag)
                for c in sorted(lists[v]):
                    if any(u in colors and not target.compatible(c, colors[u]) for u in g.adjacency[v]):
                        continue
                    key = (tuple(sorted(bag + ((v, c),))), counts)
                    store(out, key, tuple(sorted(value + ((v, c),))))
        elif node.kind == NodeKind.FORGET:
            v = node.vertex
            for (bag, counts), value in tables[node.children[0]].items():
                color = dict(bag)[v]
                if color in slot:
                    i = slot[color]
                    if counts[i] + 1 > caps[i] or sum(counts) + 1 > k:
                        continue
                    counts = counts[:i] + (counts[i] + 1,) + counts[i + 1:]
                store(out, (tuple(p for p in bag if p[0] != v), counts), value)
        else:
            left, right = (tables[c] for c in node.children)
            by_bag: Dict[Tuple[Tuple[int, int], ...], List] = {}
            for (bag, counts), value in right.items():
                by_bag.setdefault(bag, []).append((counts, value))
            for (bag, counts), value in left.items():
                for other, other_value in by_bag.get(bag, ()):
                    merged = tuple(a + b for a, b in zip(counts, other))
                    if any(m > cap for m, cap in zip(merged, caps)) or sum(merged) > k:
                        continue
                    store(out, (bag, merged), tuple(sorted(set(value) | set(other_value))))
        for child in node.children:
            tables[child] = None
        tables.append(out)
        total += len(out)

    current_stats().note_states(total)
    current_stats().note_width(nice.width)
    final = tables[-1]
    if not final:
        return None
    best = min(final.values())
    assignment = [0] * g.n
    for v, c in best:
        assignment[v] = c
    return Coloring(tuple(assignment))


def _solve_bipartite(g: ColoredGraph, target: HomTarget, lists: Lists) -> Optional[Coloring]:
    k = target.k
    keep = hck_reduce_bipartite(g, target, lists, k)
    keep_set = set(keep)
    pair = frozenset((target.b, target.w))
    ids: Dict[int, int] = {v: i for i, v in enumerate(keep)}
    new_lists: List[FrozenSet[int]] = [lists[v] for v in keep]
    edges: List[Tuple[int, int]] = [(ids[u], ids[v]) for u, v in g.edges() if u in keep_set and v in keep_set]
    groups: List[Tuple[VertexSet, int]] = []
    for comp in g.components(exclude=keep):
        if len(comp) == 1:
            (v,) = comp
            node = len(new_lists)
            new_lists.append(lists[v])
            edges += [(node, ids[u]) for u in g.adjacency[v]]
            groups.append((comp, node))
            continue
        part = g.induced(comp)
        sides = bipartite_2coloring(part, include_red=True)
        assert sides is not None
        nodes = []
        for side in sides:
            members = tuple(comp[i] for i in side)
            node = len(new_lists)
            allowed = set(pair)
            for v in members:
                allowed &= lists[v]
            new_lists.append(frozenset(allowed))
            attached = {u for v in members for u in g.adjacency[v] if u in keep_set}
            edges += [(node, ids[u]) for u in sorted(attached)]
            groups.append((members, node))
            nodes.append(node)
        edges.append((nodes[0], nodes[1]))
    compact = ColoredGraph.from_edges(len(new_lists), edges)
    current_stats().note_reduced(compact.n)
    found = hck_solve_bounded(compact, target, tuple(new_lists), k, make_nice(decompose(compact)))
    if found is None:
        return None
    assignment = [0] * g.n
    for v in keep:
        assignment[v] = found.assignment[ids[v]]
    for members, node in groups:
        for v in members:
            assignment[v] = found.assignment[node]
    return Coloring(tuple(assignment))


def hck_solve(g: ColoredGraph, target: HomTarget, lists: Lists) -> Optional[Coloring]:
    """
    Find a list (H, C, <=K)-coloring.

    Non-bipartite inputs are made bipartite by an odd cycle transversal S'
    whose coloring is guessed; caps and neighbor lists are updated and S' is
    deleted. The bipartite remainder is shrunk to the reduction set plus one
    adjacent vertex pair per larger component and solved by the bounded
    treewidth DP.

    Returns:
        A coloring that passes verify_coloring, or None
    """
    _check_lists(g, target, lists)
    if any(not row for row in lists):
        return None
    k = target.k
    s_prime: VertexSet = ()
    if not g.is_bipartite():
        found = oct(g, k)
        if found is None:
            logger.info("hck: no odd cycle transversal within {}", k)
            return None
        s_prime = found
    rest = g.remove(s_prime)
    for fixed in _partial_colorings(g, s_prime, target, lists, target.caps):
        caps = list(target.caps)
        for c in fixed.values():
            caps[c] -= 1
        restricted = _restricted_lists(g, target, lists, fixed)
        sub_lists = tuple(restricted[v] for v in rest.origin)
        if any(not row for row in sub_lists):
            continue
        sub = _solve_bipartite(rest, target.with_caps(caps), sub_lists)
        if sub is None:
            continue
        assignment = [0] * g.n
        for v, c in fixed.items():
            assignment[v] = c
        for i, v in enumerate(rest.origin):
            assignment[v] = sub.assignment[i]
        coloring = Coloring(tuple(assignment))
        logger.info("hck: coloring with {} exceptional vertices", len(coloring.exceptional(target)))
        return coloring
    return None
