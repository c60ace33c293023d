"""
Canonical sketches of partial solutions.

A sketch is the black-induced graph on the chosen vertices processed so far.
Chosen vertices still in the bag carry their vertex id as a name; forgotten
ones are anonymous. Sketch labels are ``(vertex_label, name)`` pairs.
"""

from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List

from ..graph.canonical import CanonicalGraph, canonical_form

ANON = -1

EMPTY_SKETCH = CanonicalGraph(0, (), ())


def _positions(sketch: CanonicalGraph) -> Dict[int, int]:
    return {name: i for i, (_, name) in enumerate(sketch.labels) if name != ANON}


def sketch_add(sketch: CanonicalGraph, vertex: int, label: int, neighbors: Iterable[int]) -> CanonicalGraph:
    """
    Add a named vertex adjacent to the given named vertices.

    Args:
        sketch: Current sketch
        vertex: Name (vertex id) of the new vertex
        label: Host label of the new vertex
        neighbors: Names of bag-resident chosen neighbors
    """
    where = _positions(sketch)
    n = sketch.order
    mask = 0
    for u in neighbors:
        mask |= 1 << where[u]
    rows = [row | ((mask >> i & 1) << n) for i, row in enumerate(sketch.rows)]
    rows.append(mask)
    return canonical_form(sketch.labels + ((label, vertex),), rows)


def sketch_forget(sketch: CanonicalGraph, vertex: int) -> CanonicalGraph:
    """Make a named vertex anonymous."""
    labels = tuple((lab, ANON if name == vertex else name) for lab, name in sketch.labels)
    return canonical_form(labels, sketch.rows)


def sketch_join(left: CanonicalGraph, right: CanonicalGraph) -> CanonicalGraph:
    """
    Glue two sketches along their named vertices.

    Both sides must name the same vertices with the same adjacency among them.
    """
    where = _positions(left)
    index: List[int] = []
    labels = list(left.labels)
    for lab, name in right.labels:
        if name != ANON:
            index.append(where[name])
        else:
            index.append(len(labels))
            labels.append((lab, ANON))
    rows = list(left.rows) + [0] * (len(labels) - left.order)
    for i, row in enumerate(right.rows):
        for j in range(right.order):
            if row >> j & 1:
                rows[index[i]] |= 1 << index[j]
    return canonical_form(tuple(labels), rows)


def anonymous(sketch: CanonicalGraph) -> CanonicalGraph:
    """The sketch as a plain labeled graph (names dropped)."""
    return _anonymous(sketch)


@lru_cache(maxsize=65536)
def _anonymous(sketch: CanonicalGraph) -> CanonicalGraph:
    return canonical_form(tuple(lab for lab, _ in sketch.labels), sketch.rows)


def sketch_admitted(members: FrozenSet[CanonicalGraph], sketch: CanonicalGraph) -> bool:
    return _anonymous(sketch) in members
