"""Min-fill decompositions, validation, nice form and the PACE format."""

import pytest
from hypothesis import given

from strategies import complete, cycle, graphs, path
from twcut.decomposition import (
    NodeKind,
    TreeDecomposition,
    decompose,
    format_td,
    make_nice,
    parse_td,
    require_valid,
    validate,
    violation,
)
from twcut.errors import DecompositionError, GraphFormatError


def test_widths_of_simple_families():
    assert decompose(path(6)).width == 1
    assert decompose(cycle(7)).width == 2
    assert decompose(complete(5)).width == 4


def test_empty_graph_has_one_empty_bag():
    g = path(0)
    td = decompose(g)
    assert td.bags == (frozenset(),)
    assert validate(g, td)


@given(graphs(min_n=1, max_n=12))
def test_min_fill_is_valid(g):
    assert validate(g, decompose(g))


@given(graphs(min_n=1, max_n=12))
def test_nice_form_is_valid_and_well_shaped(g):
    td = decompose(g)
    nice = make_nice(td)
    require_valid(g, nice.as_tree())
    assert nice.width == td.width
    assert not nice.nodes[nice.root].bag
    for i, node in enumerate(nice.nodes):
        assert all(child < i for child in node.children)
        if node.kind == NodeKind.LEAF:
            assert not node.bag and not node.children
        elif node.kind == NodeKind.INTRODUCE:
            (child,) = node.children
            assert node.bag == nice.nodes[child].bag | {node.vertex}
            assert node.vertex not in nice.nodes[child].bag
        elif node.kind == NodeKind.FORGET:
            (child,) = node.children
            assert node.bag == nice.nodes[child].bag - {node.vertex}
            assert node.vertex in nice.nodes[child].bag
        else:
            left, right = node.children
            assert nice.nodes[left].bag == nice.nodes[right].bag == node.bag


def test_violations_name_the_condition():
    g = path(3)
    missing_vertex = TreeDecomposition(bags=(frozenset({0, 1}),), edges=())
    assert violation(g, missing_vertex).startswith("vertex coverage")
    missing_edge = TreeDecomposition(bags=(frozenset({0, 1}), frozenset({2})), edges=((0, 1),))
    assert violation(g, missing_edge).startswith("edge coverage")
    split = TreeDecomposition(
        bags=(frozenset({0, 1}), frozenset({2}), frozenset({1, 2})),
        edges=((0, 1), (1, 2)),
    )
    assert violation(g, split).startswith("connectivity")
    not_tree = TreeDecomposition(bags=(frozenset({0, 1}), frozenset({1, 2})), edges=())
    assert violation(g, not_tree).startswith("tree")
    with pytest.raises(DecompositionError, match="edge coverage"):
        require_valid(g, missing_edge)


def test_pace_round_trip():
    g = cycle(5)
    td = decompose(g)
    text = format_td(td, g.n)
    assert text.startswith(f"s td {len(td.bags)} {td.width + 1} 5")
    parsed, n = parse_td(text)
    assert n == 5
    assert parsed.bags == td.bags
    assert validate(g, parsed)


@pytest.mark.parametrize(
    "text",
    [
        "b 1 1 2\n",
        "s td 2 2 3\nb 1 1 2\n",
        "s td 1 2 3\nb 1 x\n",
        "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 3\n",
    ],
)
def test_pace_errors(text):
    with pytest.raises(GraphFormatError):
        parse_td(text)
