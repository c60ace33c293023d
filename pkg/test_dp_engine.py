"""The constrained separator DP, checked against exhaustive search."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import build, cycle, double_path, graphs, path
from twcut.classes import ALL_GRAPHS, CLIQUE, EDGELESS, MATCHING, rank
from twcut.decomposition import TreeDecomposition, decompose, make_nice
from twcut.dp import ConstraintSpec, SeparationDemand, solve
from twcut.errors import DecompositionError, NonHereditaryClassError, VertexRangeError
from twcut.graph.canonical import canonicalize
from twcut.graph.colored import ColoredGraph
from twcut.oracle.brute import brute_constrained_cut

SPECS = {
    "any": lambda k: ConstraintSpec.any_graph(),
    "connected": lambda k: ConstraintSpec.connected_black(),
    "edgeless": EDGELESS.spec,
    "clique": CLIQUE.spec,
    "matching": MATCHING.spec,
    "rank-1": rank(1).spec,
}


def _solve(g, demand, k, spec, forbidden=()):
    return solve(g, make_nice(decompose(g)), demand, k, spec, forbidden)


@st.composite
def demand_instances(draw, max_n=8):
    g = draw(graphs(min_n=3, max_n=max_n))
    others = [(u, v) for u, v in [(a, b) for a in range(g.n) for b in range(a + 1, g.n)] if not g.has_edge(u, v)]
    red = draw(st.lists(st.sampled_from(others), max_size=2, unique=True)) if others else []
    g = ColoredGraph.from_edges(g.n, g.edges(), red_edges=red)
    vertex = st.integers(0, g.n - 1)
    side = st.lists(vertex, min_size=1, max_size=2, unique=True)
    cut = draw(st.lists(st.tuples(side, side), min_size=1, max_size=2))
    uncut = draw(st.lists(st.tuples(side, side), max_size=1))
    forbidden = draw(st.lists(vertex, max_size=2, unique=True))
    k = draw(st.integers(0, 3))
    return g, SeparationDemand.of(cut, uncut), k, sorted(forbidden)


@pytest.mark.parametrize("name", sorted(SPECS))
@given(instance=demand_instances())
def test_dp_matches_brute_force(name, instance):
    g, demand, k, forbidden = instance
    spec = SPECS[name](k)
    assert _solve(g, demand, k, spec, forbidden) == brute_constrained_cut(g, demand, k, spec, forbidden)


def test_terminals_may_enter_the_solution():
    g = path(5)
    demand = SeparationDemand.single(0, 4)
    assert _solve(g, demand, 1, ConstraintSpec.any_graph()) == (0,)
    assert _solve(g, demand, 1, ConstraintSpec.any_graph(), forbidden=[0, 4]) == (1,)


def test_forbidden_vertices_are_avoided():
    g = path(5)
    demand = SeparationDemand.single(0, 4)
    assert _solve(g, demand, 1, ConstraintSpec.any_graph(), forbidden=[0, 1, 4]) == (2,)
    assert _solve(g, demand, 3, ConstraintSpec.any_graph(), forbidden=[0, 1, 2, 3, 4]) is None


def test_edgeless_constraint_skips_adjacent_separator():
    g, s, t = double_path(2, cross=[(2, 4), (3, 5)])
    demand = SeparationDemand.single(s, t)
    assert _solve(g, demand, 2, ConstraintSpec.any_graph(), forbidden=[s, t]) == (2, 4)
    assert _solve(g, demand, 2, EDGELESS.spec(2), forbidden=[s, t]) == (2, 5)
    assert _solve(g, demand, 2, CLIQUE.spec(2), forbidden=[s, t]) == (2, 4)


def test_red_edges_separate_but_do_not_constrain():
    g = ColoredGraph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)], red_edges=[(1, 2)])
    demand = SeparationDemand.single(0, 3)
    assert _solve(g, demand, 2, EDGELESS.spec(2), forbidden=[0, 3]) == (1, 2)
    assert _solve(g, demand, 2, ConstraintSpec.connected_black(), forbidden=[0, 3]) is None


def test_uncut_pair_must_stay_connected():
    g = cycle(6)
    demand = SeparationDemand.of(cut_pairs=[([0], [3])], uncut_pairs=[([1], [2])])
    assert _solve(g, demand, 2, ConstraintSpec.any_graph()) == (0,)
    # every 0-3 separator avoiding the terminals uses 1 or 2
    assert _solve(g, demand, 2, ConstraintSpec.any_graph(), forbidden=[0, 3]) is None


def test_empty_class_is_infeasible():
    assert _solve(path(3), SeparationDemand.single(0, 2), 2, ConstraintSpec.hereditary([])) is None


def test_non_hereditary_member_list():
    triangle = canonicalize(build(3, [(0, 1), (1, 2), (0, 2)]))
    with pytest.raises(NonHereditaryClassError):
        ConstraintSpec.hereditary([triangle])


def test_universal_class_compiles_to_any():
    assert ALL_GRAPHS.spec(3) == ConstraintSpec.any_graph()


def test_decomposition_must_match_graph():
    g = path(3)
    wrong = make_nice(TreeDecomposition(bags=(frozenset({0, 1}),), edges=()))
    with pytest.raises(DecompositionError):
        solve(g, wrong, SeparationDemand.single(0, 2), 1, ConstraintSpec.any_graph())


def test_terminals_must_exist():
    with pytest.raises(VertexRangeError):
        _solve(path(3), SeparationDemand.single(0, 7), 1, ConstraintSpec.any_graph())
