"""
PACE .gr and .td text formats. Files are 1-based; everything inside the
package is 0-based, so the shift happens here and nowhere else.
"""
import logging
import sys
from typing import IO, Iterator, List, Optional, Tuple, Union

from decompositions.tree_decomposition import TreeDecomposition
from graph_core.graph import Graph
from utils.errors import InputError, PaceFormatError

logger = logging.getLogger(__name__)

Source = Union[str, IO[str]]


def _lines(source: Source) -> Iterator[Tuple[int, List[str]]]:
    """Numbered, tokenized, non-comment, non-blank lines."""
    text = source if isinstance(source, str) else source.read()
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        yield number, tokens


def _ints(tokens: List[str], number: int) -> List[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError as e:
        raise PaceFormatError(f"expected integers, got {' '.join(tokens)!r}", number) from e


def parse_gr(source: Source) -> Graph:
    n: Optional[int] = None
    declared = 0
    edges = []
    for number, tokens in _lines(source):
        if tokens[0] == "p":
            if n is not None:
                raise PaceFormatError("second header", number)
            if len(tokens) != 4 or tokens[1] != "tw":
                raise PaceFormatError("header must read 'p tw <n> <m>'", number)
            n, declared = _ints(tokens[2:], number)
            if n < 0 or declared < 0:
                raise PaceFormatError("negative counts in header", number)
            continue
        if n is None:
            raise PaceFormatError("edge before header", number)
        if len(tokens) != 2:
            raise PaceFormatError("edge lines hold exactly two vertices", number)
        u, v = _ints(tokens, number)
        if not (1 <= u <= n and 1 <= v <= n):
            raise PaceFormatError(f"vertex out of range 1..{n}", number)
        if u == v:
            raise PaceFormatError(f"self-loop at {u}", number)
        edges.append((u - 1, v - 1))
    if n is None:
        raise PaceFormatError("missing 'p tw' header")
    graph = Graph.from_edges(n, edges)
    if graph.m != declared or len(edges) != declared:
        raise PaceFormatError(f"header declares {declared} edges, found {len(edges)} ({graph.m} distinct)")
    return graph


def emit_gr(g: Graph) -> str:
    lines = [f"p tw {g.n} {g.m}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_td(source: Source) -> Tuple[TreeDecomposition, int]:
    """
    Returns:
        (td, n) with n the vertex count declared in the header
    """
    header = None
    bags: dict = {}
    edges = []
    for number, tokens in _lines(source):
        if tokens[0] == "s":
            if header is not None:
                raise PaceFormatError("second header", number)
            if len(tokens) != 5 or tokens[1] != "td":
                raise PaceFormatError("header must read 's td <bags> <max bag size> <n>'", number)
            header = _ints(tokens[2:], number)
            continue
        if header is None:
            raise PaceFormatError("content before header", number)
        count, _, n = header
        if tokens[0] == "b":
            values = _ints(tokens[1:], number)
            if not values:
                raise PaceFormatError("bag line without id", number)
            bag_id, members = values[0], values[1:]
            if not 1 <= bag_id <= count:
                raise PaceFormatError(f"bag id {bag_id} out of range 1..{count}", number)
            if bag_id in bags:
                raise PaceFormatError(f"bag {bag_id} declared twice", number)
            if any(not 1 <= v <= n for v in members):
                raise PaceFormatError(f"bag {bag_id} holds a vertex out of range 1..{n}", number)
            bags[bag_id] = frozenset(v - 1 for v in members)
            continue
        if len(tokens) != 2:
            raise PaceFormatError("tree edge lines hold exactly two bag ids", number)
        x, y = _ints(tokens, number)
        if not (1 <= x <= count and 1 <= y <= count):
            raise PaceFormatError(f"tree edge ({x}, {y}) out of range 1..{count}", number)
        edges.append((x - 1, y - 1))
    if header is None:
        raise PaceFormatError("missing 's td' header")
    count, max_size, n = header
    if sorted(bags) != list(range(1, count + 1)):
        raise PaceFormatError(f"expected bags 1..{count}, found {sorted(bags)}")
    td = TreeDecomposition.build([bags[i] for i in range(1, count + 1)], edges)
    if max((len(bag) for bag in td.bags), default=0) != max_size:
        raise PaceFormatError(f"header declares max bag size {max_size}, found {td.width + 1}")
    return td, n


def emit_td(td: TreeDecomposition, n: int) -> str:
    size = max((len(bag) for bag in td.bags), default=0)
    lines = [f"s td {len(td.bags)} {size} {n}"]
    for i, bag in enumerate(td.bags, start=1):
        lines.append(" ".join(["b", str(i)] + [str(v + 1) for v in sorted(bag)]))
    lines.extend(f"{x + 1} {y + 1}" for x, y in td.sorted_edges())
    return "\n".join(lines) + "\n"


def read_text(path: str, stdin: Optional[IO[str]] = None) -> str:
    """File contents, or standard input for '-'."""
    if path == "-":
        return (stdin or sys.stdin).read()
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
