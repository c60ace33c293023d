"""
PACE ``.td`` format for tree decompositions (1-based bag and vertex ids).
"""

from pathlib import Path
from typing import List, Tuple, Union

from ..errors import GraphFormatError
from .tree import TreeDecomposition


def format_td(td: TreeDecomposition, n: int) -> str:
    """Render ``s td <#bags> <width+1> <n>``, ``b`` lines and edge lines."""
    lines = [f"s td {len(td.bags)} {td.width + 1} {n}"]
    for i, bag in enumerate(td.bags, start=1):
        lines.append(" ".join(["b", str(i)] + [str(v + 1) for v in sorted(bag)]))
    for i, j in td.edges:
        lines.append(f"{i + 1} {j + 1}")
    return "\n".join(lines) + "\n"


def parse_td(text: str) -> Tuple[TreeDecomposition, int]:
    """
    Parse a ``.td`` document.

    Returns:
        (decomposition with 0-based ids, vertex count from the header)

    Raises:
        GraphFormatError: On a missing header, malformed lines or bag ids
    """
    header = None
    bags: dict = {}
    edges: List[Tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "s":
                if len(parts) != 5 or parts[1] != "td":
                    raise GraphFormatError(f"line {line_no}: header must be 's td <bags> <width+1> <n>'")
                header = tuple(int(x) for x in parts[2:])
            elif parts[0] == "b":
                bag_id = int(parts[1])
                bags[bag_id] = frozenset(int(v) - 1 for v in parts[2:])
            else:
                if len(parts) != 2:
                    raise GraphFormatError(f"line {line_no}: edge line needs two bag ids")
                edges.append((int(parts[0]) - 1, int(parts[1]) - 1))
        except ValueError:
            raise GraphFormatError(f"line {line_no}: expected integers in {line!r}") from None
    if header is None:
        raise GraphFormatError("missing 's td' header")
    count, _, n = header
    if sorted(bags) != list(range(1, count + 1)):
        raise GraphFormatError(f"expected bags 1..{count}")
    for i, j in edges:
        if not (0 <= i < count and 0 <= j < count):
            raise GraphFormatError(f"edge ({i + 1}, {j + 1}) refers to a missing bag")
    td = TreeDecomposition(bags=tuple(bags[i] for i in range(1, count + 1)), edges=tuple(edges))
    return td, n


def write_td(td: TreeDecomposition, n: int, path: Union[str, Path]) -> None:
    Path(path).write_text(format_td(td, n), encoding="utf-8")


def read_td(path: Union[str, Path]) -> Tuple[TreeDecomposition, int]:
    try:
        return parse_td(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise GraphFormatError(f"Cannot read decomposition file {path}: {e}") from e
