"""Constrained s-t cuts, edge-induced cuts, connected cuts and multicut-uncut."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import build, double_path, graphs, pair_instances, path, terminal_instances
from twcut.classes import ALL_GRAPHS, CLIQUE, EDGELESS, MATCHING, max_deficiency
from twcut.dp import ConstraintSpec, SeparationDemand
from twcut.errors import PreconditionError
from twcut.flow.network import min_vertex_cut
from twcut.graph.canonical import canonicalize
from twcut.graph.ops import is_separator
from twcut.oracle.brute import brute_constrained_cut, brute_steiner_tree
from twcut.solvers import (
    connected_cut,
    edge_induced_vertex_cut,
    g_mincut,
    multicut_uncut,
    stable_cut,
    steiner_tree_bounded,
)


def _diamond():
    """s = 0 and t = 1 joined through the adjacent vertices 2 and 3."""
    return build(4, [(0, 2), (2, 1), (0, 3), (3, 1), (2, 3)])


def _star(leaves):
    return build(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _brute_cut(g, s, t, k, spec):
    return brute_constrained_cut(g, SeparationDemand.single(s, t), k, spec, (s, t))


class TestGMincut:
    def test_stable_cut_on_double_path(self):
        g, s, t = double_path(3)
        assert stable_cut(g, s, t, 2) == (2, 5)

    def test_stable_cut_on_diamond_is_absent(self):
        assert stable_cut(_diamond(), 0, 1, 2) is None

    def test_bipartite_double_path_with_path_count_budget(self):
        g, s, t = double_path(4)
        assert g.is_bipartite()
        assert len(stable_cut(g, s, t, 2)) == 2

    def test_universal_class_matches_min_vertex_cut(self):
        g, s, t = double_path(3, cross=[(2, 5), (4, 7)])
        size, _ = min_vertex_cut(g, s, t, 3)
        assert len(g_mincut(g, s, t, 3, ALL_GRAPHS)) == size

    def test_adjacent_terminals(self):
        assert g_mincut(path(2), 0, 1, 3, ALL_GRAPHS) is None
        with pytest.raises(PreconditionError):
            g_mincut(path(3), 1, 1, 1, ALL_GRAPHS)

    @pytest.mark.parametrize("graph_class", [ALL_GRAPHS, EDGELESS, CLIQUE, MATCHING], ids=lambda c: c.name)
    @given(instance=terminal_instances(max_n=9))
    def test_matches_brute_force(self, graph_class, instance):
        g, s, t, k = instance
        found = g_mincut(g, s, t, k, graph_class)
        expected = _brute_cut(g, s, t, k, graph_class.spec(k))
        assert (found is None) == (expected is None)
        if found is not None:
            assert len(found) == len(expected)
            assert is_separator(g, found, [s], [t])
            assert s not in found and t not in found
            assert graph_class.contains(canonicalize(g, found, include_red=False))

    @given(instance=terminal_instances(max_n=8))
    def test_reduction_does_not_change_the_answer_size(self, instance):
        g, s, t, k = instance
        reduced = g_mincut(g, s, t, k, EDGELESS)
        direct = g_mincut(g, s, t, k, EDGELESS, reduce=False)
        assert (reduced is None) == (direct is None)
        if reduced is not None:
            assert len(reduced) == len(direct)


class TestEdgeInducedCut:
    def test_diamond(self):
        assert edge_induced_vertex_cut(_diamond(), 0, 1, 1) == ((2, 3), [(2, 3)])

    def test_path(self):
        sep, cover = edge_induced_vertex_cut(path(3), 0, 2, 1)
        assert sep == (1,)
        assert len(cover) == 1 and 1 in cover[0]

    def test_independent_separator_needs_two_edges(self):
        g, s, t = double_path(3)
        assert edge_induced_vertex_cut(g, s, t, 1) is None
        sep, cover = edge_induced_vertex_cut(g, s, t, 2)
        assert len(cover) <= 2

    @given(instance=terminal_instances(max_n=9, max_k=2))
    def test_cover_is_small_and_spans_the_separator(self, instance):
        g, s, t, k = instance
        found = edge_induced_vertex_cut(g, s, t, k)
        expected = _brute_cut(g, s, t, 2 * k, max_deficiency(k).spec(2 * k))
        assert (found is None) == (expected is None)
        if found is not None:
            sep, cover = found
            assert len(cover) <= k
            assert set(sep) <= {v for e in cover for v in e}
            assert all(g.has_edge(u, v) for u, v in cover)
            assert is_separator(g, sep, [s], [t])


class TestSteinerTree:
    def test_single_terminal(self):
        assert steiner_tree_bounded(path(3), [1], 1) == (1,)

    def test_path_endpoints(self):
        assert steiner_tree_bounded(path(4), [0, 3], 4) == (0, 1, 2, 3)
        assert steiner_tree_bounded(path(4), [0, 3], 3) is None

    def test_two_leaves_of_star(self):
        assert steiner_tree_bounded(_star(4), [1, 2], 3) == (0, 1, 2)

    def test_allowed_region(self):
        g = build(4, [(0, 1), (1, 3), (0, 2), (2, 3)])
        assert steiner_tree_bounded(g, [0, 3], 3) == (0, 1, 3)
        assert steiner_tree_bounded(g, [0, 3], 3, allowed=[0, 2, 3]) == (0, 2, 3)

    @given(graphs(min_n=2, max_n=9), st.data())
    def test_matches_brute_force(self, g, data):
        x = data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, max_size=3, unique=True))
        k = data.draw(st.integers(len(x), len(x) + 3))
        assert steiner_tree_bounded(g, x, k) == brute_steiner_tree(g, x, k)


class TestConnectedCut:
    def test_disjoint_paths_have_no_connected_cut(self):
        g, s, t = double_path(3)
        assert connected_cut(g, s, t, 4) is None

    def test_cross_edge_gives_connected_cut(self):
        g, s, t = double_path(3, cross=[(2, 5)])
        assert connected_cut(g, s, t, 2) == (2, 5)

    def test_path(self):
        assert connected_cut(path(3), 0, 2, 1) == (1,)

    def test_disconnected_terminals(self):
        assert connected_cut(path(4).remove([1]), 0, 2, 1) == ()

    @given(instance=terminal_instances(max_n=9, max_k=4))
    def test_matches_brute_force(self, instance):
        g, s, t, k = instance
        found = connected_cut(g, s, t, k)
        expected = _brute_cut(g, s, t, k, ConstraintSpec.connected_black())
        assert (found is None) == (expected is None)
        if found is not None:
            assert len(found) == len(expected)
            assert is_separator(g, found, [s], [t])
            assert len(g.induced(found).components()) <= 1


class TestMulticutUncut:
    def test_star_center_separates_both_pairs(self):
        assert multicut_uncut(_star(4), [([1], [2]), ([3], [4])], [], 1, ALL_GRAPHS) == (0,)

    def test_star_uncut_pairs_need_nothing(self):
        assert multicut_uncut(_star(4), [], [([1], [2]), ([3], [4])], 1, ALL_GRAPHS) == ()

    def test_mixed_pairs_on_star(self):
        # the center would separate the uncut pair, so leaf 1 goes instead
        assert multicut_uncut(_star(4), [([1], [2])], [([3], [4])], 1, ALL_GRAPHS) == (1,)

    def test_cut_pair_beyond_budget(self):
        g, s, t = double_path(3)
        assert multicut_uncut(g, [([s, 2], [t, 5])], [], 1, ALL_GRAPHS) is None

    @given(instance=pair_instances(max_n=8))
    def test_matches_brute_force(self, instance):
        g, cut, uncut, k = instance
        found = multicut_uncut(g, cut, uncut, k, ALL_GRAPHS)
        demand = SeparationDemand.of(cut, uncut)
        expected = brute_constrained_cut(g, demand, k, ConstraintSpec.any_graph())
        assert (found is None) == (expected is None)
        if found is not None:
            assert len(found) == len(expected)
            assert demand.satisfied_by(g, found)

    @given(instance=pair_instances(max_n=7, max_pairs=2))
    def test_stable_class_matches_brute_force(self, instance):
        g, cut, uncut, k = instance
        found = multicut_uncut(g, cut, uncut, k, EDGELESS)
        expected = brute_constrained_cut(g, SeparationDemand.of(cut, uncut), k, EDGELESS.spec(k))
        assert (found is None) == (expected is None)
        if found is not None:
            assert len(found) == len(expected)
