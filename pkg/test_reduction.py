"""Separator covers, set separators, the reduced graph and exact membership."""

from itertools import combinations

import pytest
from hypothesis import assume, given

from strategies import build, double_path, path, terminal_instances
from twcut.errors import PreconditionError, SeparatorBoundError
from twcut.flow.chain import separator_chain
from twcut.graph.colored import SUBDIVISION
from twcut.graph.ops import is_separator
from twcut.oracle.brute import brute_min_cut, brute_minimal_separator_union
from twcut.reduction.cover import contract_layer, cover_minimal_separators, layers
from twcut.reduction.membership import separator_membership
from twcut.reduction.sets import cover_set_separators, project_terminals
from twcut.reduction.terminals import reduce_terminals


def _minimal_separators(g, s, t, k):
    others = [v for v in range(g.n) if v not in (s, t)]
    for size in range(k + 1):
        for sep in combinations(others, size):
            if is_separator(g, sep, [s], [t]) and all(
                not is_separator(g, [u for u in sep if u != v], [s], [t]) for v in sep
            ):
                yield sep


def _separable(g, s, t, k):
    return not g.has_edge(s, t) and brute_min_cut(g, s, t, k) is not None


def test_cover_of_path():
    assert cover_minimal_separators(path(3), 0, 2, 1) == (1,)


def test_cover_of_double_path_with_slack():
    g, s, t = double_path(3)
    assert cover_minimal_separators(g, s, t, 2) == (2, 3, 4, 5, 6, 7)


def test_cover_errors():
    with pytest.raises(PreconditionError):
        cover_minimal_separators(path(2), 0, 1, 2)
    g, s, t = double_path(2)
    with pytest.raises(SeparatorBoundError):
        cover_minimal_separators(g, s, t, 1)


@given(terminal_instances(max_n=10, max_k=4))
def test_cover_contains_every_small_minimal_separator(instance):
    g, s, t, k = instance
    assume(_separable(g, s, t, k))
    assert set(brute_minimal_separator_union(g, s, t, k)) <= set(cover_minimal_separators(g, s, t, k))


@given(terminal_instances(max_n=8, max_k=3))
def test_membership_is_exact(instance):
    g, s, t, k = instance
    assume(k >= 1)
    assert separator_membership(g, s, t, k) == brute_minimal_separator_union(g, s, t, k)


def test_layers_partition_the_middle():
    g, s, t = double_path(3)
    chain = separator_chain(g, s, t)
    seen = set()
    for layer in layers(g, s, t, chain):
        assert not seen & set(layer.vertices)
        seen |= set(layer.vertices)
    assert seen | {v for sep in chain.separators for v in sep} | {s, t} == set(range(g.n))


def test_contract_layer_merges_sides():
    g = path(5)
    sub, a, b = contract_layer(g, [2], [1], [3])
    assert sub.n == 3
    assert sorted(sub.edges()) == [(0, a), (0, b)]
    assert sub.origin == (2, SUBDIVISION, SUBDIVISION)


@given(terminal_instances(max_n=9, max_k=3))
def test_reduced_graph_keeps_small_minimal_separators(instance):
    g, s, t, k = instance
    assume(_separable(g, s, t, k))
    result = reduce_terminals(g, (s, t), k)
    star = result.reduced
    ls, lt = result.local(s), result.local(t)
    for sep in _minimal_separators(g, s, t, k):
        local = [result.local(v) for v in sep]
        assert is_separator(star, local, [ls], [lt])
        for v in local:
            assert not is_separator(star, [u for u in local if u != v], [ls], [lt])


@given(terminal_instances(max_n=9, max_k=3))
def test_reduced_graph_is_induced_on_cover(instance):
    g, s, t, k = instance
    assume(_separable(g, s, t, k))
    result = reduce_terminals(g, (s, t), k)
    star = result.reduced
    kept = [i for i, o in enumerate(result.origin_map) if o != SUBDIVISION]
    for i, j in combinations(kept, 2):
        black = star.has_edge(i, j) and (min(i, j), max(i, j)) not in star.red
        assert black == g.has_edge(result.origin_map[i], result.origin_map[j])


def test_reduce_needs_two_terminals():
    with pytest.raises(PreconditionError):
        reduce_terminals(path(3), [0], 1)


def test_set_separators_with_shared_vertex():
    g = path(3)
    cover = cover_set_separators(g, [0, 1], [1, 2], 2)
    assert 1 in cover


def test_set_separators_bound():
    g = build(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    with pytest.raises(SeparatorBoundError):
        cover_set_separators(g, [0], [1], 0)
    assert cover_set_separators(g, [0], [1], 1) == (0, 1)
    assert cover_set_separators(g, [0], [1], 2) == (0, 1, 2, 3)


def test_project_terminals():
    g = path(5)
    px, py = project_terminals(g, [2], [0], [4])
    assert px == (2,)
    assert py == (2,)
    with pytest.raises(PreconditionError):
        project_terminals(g, [], [0], [4])
