"""Minimum vertex cuts and the chain of minimum separators."""

from itertools import combinations

import pytest
from hypothesis import assume, given

from strategies import double_path, path, terminal_instances
from twcut.errors import PreconditionError
from twcut.flow.chain import separator_chain
from twcut.flow.network import SplitNetwork, min_vertex_cut
from twcut.graph.ops import is_separator
from twcut.oracle.brute import brute_min_cut
from twcut.utils.generators import hypercube


@pytest.mark.parametrize("dim", [3, 4, 5])
def test_hypercube_opposite_corners(dim):
    g = hypercube(dim)
    size, sep = min_vertex_cut(g, 0, g.n - 1, dim)
    assert size == dim
    assert is_separator(g, sep, [0], [g.n - 1])
    assert min_vertex_cut(g, 0, g.n - 1, dim - 1) is None


def test_min_vertex_cut_trivial_cases():
    assert min_vertex_cut(path(3), 0, 2, 1) == (1, (1,))
    assert min_vertex_cut(path(2), 0, 1, 5) is None
    g, s, t = double_path(3)
    assert min_vertex_cut(g, s, t, 1) is None
    assert min_vertex_cut(g, s, t, 2)[0] == 2
    with pytest.raises(PreconditionError):
        min_vertex_cut(path(3), 1, 1, 1)


def test_disconnected_terminals_need_nothing():
    g = path(4).remove([1])
    assert min_vertex_cut(g, 0, 2, 0) == (0, ())


def test_split_network_flow_value():
    g, s, t = double_path(2)
    network = SplitNetwork(g, s, t)
    assert network.maximize() == 2
    assert not network.augment()


@given(terminal_instances(max_n=9))
def test_min_cut_matches_brute_force(instance):
    g, s, t, k = instance
    found = min_vertex_cut(g, s, t, k)
    expected = brute_min_cut(g, s, t, k)
    assert (found is None) == (expected is None)
    if found is not None:
        assert found[0] == len(expected)
        assert is_separator(g, found[1], [s], [t])


@given(terminal_instances(max_n=10))
def test_chain_covers_every_minimum_separator(instance):
    g, s, t, _ = instance
    assume(not g.has_edge(s, t))
    best = brute_min_cut(g, s, t)
    assume(best)
    chain = separator_chain(g, s, t)
    assert chain.ell == len(best)
    assert all(len(sep) == chain.ell for sep in chain.separators)
    assert all(is_separator(g, sep, [s], [t]) for sep in chain.separators)
    union = set(chain.union())
    others = [v for v in range(g.n) if v not in (s, t)]
    for candidate in combinations(others, chain.ell):
        if is_separator(g, candidate, [s], [t]):
            assert set(candidate) <= union


@given(terminal_instances(max_n=9))
def test_chain_sets_are_nested(instance):
    g, s, t, _ = instance
    assume(not g.has_edge(s, t))
    assume(brute_min_cut(g, s, t))
    sets = separator_chain(g, s, t).sets()
    for smaller, larger in zip(sets, sets[1:]):
        assert set(smaller) < set(larger)


def test_chain_rejects_adjacent_or_disconnected():
    with pytest.raises(PreconditionError):
        separator_chain(path(2), 0, 1)
    with pytest.raises(PreconditionError):
        separator_chain(path(4).remove([1]), 0, 2)
