"""
Text formats: graphs (DIMACS-like, 1-based ids) and separation pair files.

Graph format::

    c optional comment
    p <n> <m>
    e <u> <v>          (m edge lines)
    r <u> <v>          (red edge, written only for colored torsos)
    l <v> <label>      (optional vertex labels)
"""

from pathlib import Path
from typing import Iterable, List, Tuple, Union

from ..errors import GraphFormatError
from .colored import ColoredGraph, Edge, VertexSet

PairList = List[Tuple[VertexSet, VertexSet]]


def _ints(tokens: Iterable[str], line_no: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"line {line_no}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> ColoredGraph:
    """
    Parse the graph text format.

    Args:
        text: File contents

    Returns:
        The graph, ids shifted to 0-based

    Raises:
        GraphFormatError: On malformed lines, missing header, bad ids or an
            edge count that does not match the header
    """
    n = None
    declared_m = 0
    black: List[Edge] = []
    red: List[Edge] = []
    labels: dict = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("#"):
            continue
        kind, *rest = line.split()
        if kind == "p":
            if n is not None:
                raise GraphFormatError(f"line {line_no}: duplicate header")
            values = _ints(rest[-2:], line_no) if len(rest) >= 2 else []
            if len(values) != 2 or values[0] < 0 or values[1] < 0:
                raise GraphFormatError(f"line {line_no}: header must be 'p <n> <m>'")
            n, declared_m = values
            continue
        if n is None:
            raise GraphFormatError(f"line {line_no}: '{kind}' line before the 'p' header")
        values = _ints(rest, line_no)
        if len(values) != 2:
            raise GraphFormatError(f"line {line_no}: '{kind}' expects two integers")
        if kind in ("e", "r"):
            u, v = values
            for x in (u, v):
                if x < 1 or x > n:
                    raise GraphFormatError(f"line {line_no}: vertex {x} outside 1..{n}")
            if u == v:
                raise GraphFormatError(f"line {line_no}: self-loop at {u}")
            (black if kind == "e" else red).append((u - 1, v - 1))
        elif kind == "l":
            v, label = values
            if v < 1 or v > n:
                raise GraphFormatError(f"line {line_no}: vertex {v} outside 1..{n}")
            labels[v - 1] = label
        else:
            raise GraphFormatError(f"line {line_no}: unknown line type '{kind}'")
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    keys = {(min(u, v), max(u, v)) for u, v in black + red}
    if len(keys) != len(black) + len(red):
        raise GraphFormatError("duplicate edge")
    if len(keys) != declared_m:
        raise GraphFormatError(f"header declares {declared_m} edges, found {len(keys)}")
    return ColoredGraph.from_edges(n, black, red, [labels.get(v, 0) for v in range(n)])


def read_graph(path: Union[str, Path]) -> ColoredGraph:
    """Read a graph file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise GraphFormatError(f"Cannot read graph file {path}: {e}") from e
    return parse_graph(text)


def format_graph(g: ColoredGraph) -> str:
    """Render a graph in the text format; edges sorted, labels only if nonzero."""
    lines = [f"p {g.n} {g.m}"]
    for u, v in g.edges():
        tag = "r" if (u, v) in g.red else "e"
        lines.append(f"{tag} {u + 1} {v + 1}")
    for v, label in enumerate(g.labels):
        if label:
            lines.append(f"l {v + 1} {label}")
    return "\n".join(lines) + "\n"


def write_graph(g: ColoredGraph, path: Union[str, Path]) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8")


def _parse_side(tokens: List[str], line_no: int, n: int) -> VertexSet:
    values = _ints(tokens, line_no)
    for v in values:
        if v < 1 or v > n:
            raise GraphFormatError(f"line {line_no}: vertex {v} outside 1..{n}")
    return tuple(sorted({v - 1 for v in values}))


def parse_pairs(text: str, n: int) -> Tuple[PairList, PairList]:
    """
    Parse a pair file with lines ``cut <X ids> | <Y ids>`` or ``uncut ...``.

    Args:
        text: File contents
        n: Vertex count of the graph the ids refer to

    Returns:
        (cut_pairs, uncut_pairs) with 0-based ids
    """
    cut: PairList = []
    uncut: PairList = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("c "):
            continue
        kind, _, rest = line.partition(" ")
        if kind not in ("cut", "uncut") or rest.count("|") != 1:
            raise GraphFormatError(f"line {line_no}: expected 'cut X | Y' or 'uncut X | Y'")
        left, right = rest.split("|")
        x = _parse_side(left.split(), line_no, n)
        y = _parse_side(right.split(), line_no, n)
        if not x or not y:
            raise GraphFormatError(f"line {line_no}: both sides of a pair must be nonempty")
        (cut if kind == "cut" else uncut).append((x, y))
    return cut, uncut


def read_pairs(path: Union[str, Path], n: int) -> Tuple[PairList, PairList]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise GraphFormatError(f"Cannot read pairs file {path}: {e}") from e
    return parse_pairs(text, n)
