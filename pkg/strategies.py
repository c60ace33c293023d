"""Hypothesis strategies and small named graphs shared by the test modules."""

from itertools import combinations
from typing import Iterable, List, Tuple

from hypothesis import strategies as st

from twcut.graph.colored import ColoredGraph, Edge


def build(n: int, edges: Iterable[Edge]) -> ColoredGraph:
    return ColoredGraph.from_edges(n, list(edges))


def path(n: int) -> ColoredGraph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> ColoredGraph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> ColoredGraph:
    return build(n, combinations(range(n), 2))


def double_path(length: int = 3, cross: Iterable[Edge] = ()) -> Tuple[ColoredGraph, int, int]:
    """
    s = 0 and t = 1 joined by two internally disjoint paths of ``length``
    internal vertices: a-path 2..length+1, b-path after it.
    """
    a = list(range(2, 2 + length))
    b = list(range(2 + length, 2 + 2 * length))
    edges: List[Edge] = []
    for side in (a, b):
        chain = [0] + side + [1]
        edges += list(zip(chain, chain[1:]))
    return build(2 + 2 * length, edges + list(cross)), 0, 1


def two_triangles() -> ColoredGraph:
    return build(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


@st.composite
def graphs(draw, min_n: int = 2, max_n: int = 9, max_p: float = 0.6) -> ColoredGraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    p = draw(st.floats(min_value=0.1, max_value=max_p))
    chosen = draw(st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=len(pairs), max_size=len(pairs)))
    return build(n, [e for e, x in zip(pairs, chosen) if x < p])


@st.composite
def terminal_instances(draw, min_n: int = 3, max_n: int = 9, max_k: int = 3) -> Tuple[ColoredGraph, int, int, int]:
    """(g, s, t, k) with s != t."""
    g = draw(graphs(min_n=min_n, max_n=max_n))
    s, t = draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    k = draw(st.integers(min_value=0, max_value=max_k))
    return g, s, t, k


@st.composite
def pair_instances(draw, max_n: int = 8, max_pairs: int = 3, max_k: int = 3):
    """(g, cut_pairs, uncut_pairs, k) with nonempty pair sides."""
    g = draw(graphs(min_n=3, max_n=max_n))
    side = st.lists(st.integers(0, g.n - 1), min_size=1, max_size=2, unique=True).map(lambda xs: tuple(sorted(xs)))
    total = draw(st.integers(min_value=1, max_value=max_pairs))
    cut_count = draw(st.integers(min_value=1, max_value=total))
    pairs = [(draw(side), draw(side)) for _ in range(total)]
    k = draw(st.integers(min_value=0, max_value=max_k))
    return g, pairs[:cut_count], pairs[cut_count:], k
