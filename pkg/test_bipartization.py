"""Odd cycle transversals, constrained bipartization and exact stable bipartization."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import complete, cycle, graphs, path, two_triangles
from twcut.classes import ALL_GRAPHS, EDGELESS, MATCHING
from twcut.errors import PreconditionError
from twcut.graph.canonical import canonicalize
from twcut.oracle.brute import brute_bipartization
from twcut.solvers import (
    branches,
    exact_stable_bipartization,
    g_bipartization,
    oct,
    separation_sets,
    shortest_odd_cycle,
)

budgets = st.integers(min_value=0, max_value=3)


def _independent(g, vs):
    return all(not g.has_edge(u, v) for u in vs for v in vs if u < v)


class TestOddCycleTransversal:
    def test_odd_cycle(self):
        assert len(oct(cycle(5), 1)) == 1
        assert oct(cycle(5), 0) is None

    def test_complete_graph(self):
        assert len(oct(complete(4), 2)) == 2
        assert oct(complete(4), 1) is None

    def test_bipartite_graph_needs_nothing(self):
        assert oct(cycle(6), 0) == ()

    @given(graphs(max_n=9), budgets)
    def test_matches_brute_force(self, g, k):
        found = oct(g, k)
        expected = brute_bipartization(g, k)
        assert (found is None) == (expected is None)
        if found is not None:
            assert len(found) == len(expected)
            assert g.remove(found).is_bipartite()


class TestSeparationSets:
    def test_targets_on_same_side_go_to_x(self):
        assert separation_sets(path(4), ((0, 2), (1, 3)), (0,), (2,)) == ((0,), (2,))
        assert separation_sets(path(4), ((0, 2), (1, 3)), (0,), (1,)) == ((0, 1), ())

    def test_requires_proper_coloring(self):
        with pytest.raises(PreconditionError):
            separation_sets(path(4), ((0, 1), (2, 3)), (), ())

    def test_branch_count(self):
        assert len(list(branches(path(2), (0, 1)))) == 7
        assert len(list(branches(path(2), (0, 1), budget=0))) == 2


class TestGBipartization:
    def test_universal_class_is_oct(self):
        assert len(g_bipartization(cycle(5), 1, ALL_GRAPHS)) == 1

    def test_stable_on_two_triangles(self):
        found = g_bipartization(two_triangles(), 2, EDGELESS)
        assert len(found) == 2
        assert _independent(two_triangles(), found)

    def test_stable_on_complete_graph_is_absent(self):
        assert g_bipartization(complete(4), 3, EDGELESS) is None
        assert len(g_bipartization(complete(4), 2, MATCHING)) == 2

    @pytest.mark.parametrize("graph_class", [EDGELESS, MATCHING], ids=lambda c: c.name)
    @given(g=graphs(max_n=9), k=budgets)
    def test_matches_brute_force(self, graph_class, g, k):
        found = g_bipartization(g, k, graph_class)
        expected = brute_bipartization(g, k, graph_class)
        assert (found is None) == (expected is None)
        if found is not None:
            assert len(found) == len(expected)
            assert g.remove(found).is_bipartite()
            assert graph_class.contains(canonicalize(g, found, include_red=False))


class TestShortestOddCycle:
    def test_five_cycle(self):
        found = shortest_odd_cycle(cycle(5), (0,))
        assert sorted(found) == [0, 1, 2, 3, 4]

    def test_prefers_triangle(self):
        g = two_triangles()
        assert len(shortest_odd_cycle(g, (0, 3))) == 3

    def test_bipartite(self):
        assert shortest_odd_cycle(path(4), ()) is None

    def test_rejects_non_transversal(self):
        with pytest.raises(PreconditionError):
            shortest_odd_cycle(cycle(5), ())

    @given(graphs(max_n=9))
    def test_cycle_is_closed_and_odd(self, g):
        s_known = oct(g, g.n)
        found = shortest_odd_cycle(g, s_known)
        if found is None:
            assert g.is_bipartite()
            return
        assert len(found) % 2 == 1
        assert len(set(found)) == len(found)
        for u, v in zip(found, found[1:] + found[:1]):
            assert g.has_edge(u, v)


class TestExactStableBipartization:
    @pytest.mark.parametrize("n,k", [(5, 1), (5, 2), (9, 2), (9, 3)])
    def test_odd_cycles(self, n, k):
        g = cycle(n)
        found = exact_stable_bipartization(g, k)
        assert len(found) == k
        assert _independent(g, found)
        assert g.remove(found).is_bipartite()

    def test_two_triangles(self):
        assert len(exact_stable_bipartization(two_triangles(), 2)) == 2
        assert exact_stable_bipartization(two_triangles(), 3) is None
        assert exact_stable_bipartization(two_triangles(), 1) is None

    def test_complete_graph(self):
        assert exact_stable_bipartization(complete(4), 2) is None

    def test_zero_budget(self):
        assert exact_stable_bipartization(path(3), 0) == ()
        assert exact_stable_bipartization(cycle(3), 0) is None

    @given(graphs(max_n=9), budgets)
    def test_feasibility_matches_brute_force(self, g, k):
        found = exact_stable_bipartization(g, k)
        expected = brute_bipartization(g, k, EDGELESS, exact=True)
        assert (found is None) == (expected is None)
        if found is not None:
            assert len(found) == k
            assert _independent(g, found)
            assert g.remove(found).is_bipartite()
