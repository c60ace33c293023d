"""Torso algebra."""

from itertools import combinations

from hypothesis import given
from hypothesis import strategies as st

from strategies import build, graphs, path
from twcut.graph.colored import EdgeColor
from twcut.graph.ops import is_separator
from twcut.graph.torso import torso


@st.composite
def nested_sets(draw):
    g = draw(graphs(min_n=3, max_n=7))
    c2 = draw(st.sets(st.integers(0, g.n - 1), min_size=2))
    c1 = draw(st.sets(st.sampled_from(sorted(c2)), min_size=1))
    return g, sorted(c1), sorted(c2)


def test_torso_of_path_endpoints():
    t = torso(path(4), [0, 3])
    assert t.n == 2
    assert t.color(0, 1) == EdgeColor.RED
    assert t.origin == (0, 3)


def test_torso_keeps_original_edges_black():
    g = build(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    t = torso(g, [0, 1, 2])
    assert t.color(0, 1) == EdgeColor.BLACK
    assert t.color(0, 2) == EdgeColor.RED
    assert t.red_edges() == [(0, 2)]


@given(nested_sets())
def test_torso_is_transitive(data):
    g, c1, c2 = data
    outer = torso(g, c2)
    local = {v: i for i, v in enumerate(outer.origin)}
    nested = torso(outer, [local[v] for v in c1])
    direct = torso(g, c1)
    assert nested.same_structure(direct)


@given(nested_sets())
def test_torso_is_monotone(data):
    g, c1, c2 = data
    small = torso(g, c1)
    big = torso(g, c2)
    local = {v: i for i, v in enumerate(big.origin)}
    for u, v in small.edges():
        assert big.has_edge(local[c1[u]], local[c1[v]])


@given(nested_sets())
def test_separators_inside_c_agree_with_torso(data):
    g, _, c = data
    t = torso(g, c)
    local = {v: i for i, v in enumerate(c)}
    for x, y in combinations(c, 2):
        rest = [v for v in c if v not in (x, y)]
        for size in range(min(3, len(rest)) + 1):
            for s in combinations(rest, size):
                in_g = is_separator(g, s, [x], [y])
                in_torso = is_separator(t, [local[v] for v in s], [local[x]], [local[y]])
                assert in_g == in_torso
