"""Larger instances; run with --runslow."""

import random
import time

import networkx as nx
import pytest

from strategies import cycle
from twcut.classes import EDGELESS
from twcut.decomposition.tree import decompose
from twcut.flow.network import min_vertex_cut
from twcut.graph.colored import ColoredGraph
from twcut.graph.ops import is_separator
from twcut.logger import collect_stats
from twcut.reduction import reduce_terminals
from twcut.solvers import HckDocument, connected_cut, g_mincut, hck_solve, stable_cut, verify_coloring
from twcut.utils.generators import GraphKind, generate, gnm, hypercube

pytestmark = pytest.mark.slow


@pytest.mark.parametrize("seed", range(5))
def test_stable_cut_on_sparse_random_graphs(seed):
    g = gnm(60, 90, seed=seed)
    s, t = 0, g.n - 1
    found = g_mincut(g, s, t, 4, EDGELESS)
    if found is not None:
        assert is_separator(g, found, [s], [t])
        assert all(not g.has_edge(u, v) for u in found for v in found if u < v)


def test_reduced_width_stays_small_on_grid():
    g = generate(GraphKind.GRID, n=8)
    with collect_stats() as stats:
        found = g_mincut(g, 0, g.n - 1, 2, EDGELESS)
    assert found is not None and len(found) == 2
    assert stats.reduced_vertices < g.n


def test_connected_cut_on_hypercube():
    g = hypercube(5)
    size, _ = min_vertex_cut(g, 0, g.n - 1, 5)
    found = connected_cut(g, 0, g.n - 1, 6)
    assert found is None or len(found) >= size


def test_hck_on_long_odd_cycle():
    doc = {
        "H": {"vertices": list("abcde"), "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "e"], ["e", "a"]]},
        "C": ["c", "d", "e"],
        "K": {"c": 2, "d": 2, "e": 2},
    }
    target = HckDocument.model_validate(doc).target()
    g = cycle(41)
    lists = (frozenset(range(5)),) * g.n
    found = hck_solve(g, target, lists)
    assert found is not None
    assert verify_coloring(g, target, lists, found)


def _terminal_family(n, seed):
    """Random path plus 2n random edges; terminals n and n+1 each see two vertices."""
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = set(zip(order, order[1:]))
    edges.update(nx.gnm_random_graph(n, 2 * n, seed=seed).edges())
    s, t = n, n + 1
    for terminal in (s, t):
        edges.update((terminal, v) for v in rng.sample(range(n), 2))
    return ColoredGraph.from_edges(n + 2, edges), s, t


def _reduced_width(n, k, seeds):
    widest = 0
    for seed in seeds:
        g, s, t = _terminal_family(n, seed)
        reduced = reduce_terminals(g, (s, t), k).reduced
        widest = max(widest, decompose(reduced).width)
    return widest


def test_reduced_width_does_not_grow_with_n():
    seeds = range(20)
    base = _reduced_width(20, 3, seeds)
    for n in (40, 80):
        assert _reduced_width(n, 3, seeds) <= base + 1


def _best_time(g, s, t, k, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        stable_cut(g, s, t, k)
        best = min(best, time.perf_counter() - start)
    return best


def test_stable_cut_runtime_scales_linearly():
    small = gnm(2500, 7500, seed=11)
    large = gnm(10000, 30000, seed=11)
    small_time = _best_time(small, 0, small.n - 1, 3)
    large_time = _best_time(large, 0, large.n - 1, 3)
    assert large_time < 60
    assert large_time <= max(5 * small_time, 1.0)


def _sparse_terminals(g):
    """Lowest and highest id of degree 2 or 3 in the largest component, non-adjacent."""
    giant = max(g.components(), key=len)
    candidates = [v for v in giant if 2 <= len(g.adjacency[v]) <= 3]
    s = candidates[0]
    t = next(v for v in reversed(candidates) if v != s and not g.has_edge(s, v))
    return s, t


def test_stable_cut_on_large_graph_with_small_cut():
    g = gnm(10000, 30000, seed=5)
    s, t = _sparse_terminals(g)
    start = time.perf_counter()
    with collect_stats() as stats:
        found = stable_cut(g, s, t, 3)
    assert time.perf_counter() - start < 60
    assert stats.reduced_vertices < g.n
    if found is not None:
        assert is_separator(g, found, [s], [t])
        assert all(not g.has_edge(u, v) for u in found for v in found if u < v)
