"""Plain-text formats for graphs and colorings.

Graph file::

    # optional comments
    p <n> <m>
    <u> <v>        (m lines, 0 <= u, v < n)

Coloring file::

    c <k>
    <u> <v> <color>

Output is ASCII with LF line endings and single spaces; edges are written
normalized (u < v) and sorted, so saving is canonical.
"""

from __future__ import annotations

from typing import Iterable, Mapping, TextIO

from .coloring import LinearColoring
from .errors import NonSimpleInput, ParseError
from .graph import Edge, Graph, norm


def _content_lines(lines: Iterable[str]):
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(fields: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in fields]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(fields)!r}") from None


def parse_graph(text: str) -> Graph:
    rows = _content_lines(text.splitlines())
    try:
        lineno, head = next(rows)
    except StopIteration:
        raise ParseError("empty graph file") from None
    if len(head) != 3 or head[0] != "p":
        raise ParseError(f"line {lineno}: expected header 'p <n> <m>'")
    n, m = _ints(head[1:], lineno)
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: negative size in header")
    g = Graph(n)
    count = 0
    for lineno, fields in rows:
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected '<u> <v>'")
        u, v = _ints(fields, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise NonSimpleInput(f"line {lineno}: self-loop at {u}")
        if g.adjacent(u, v):
            raise NonSimpleInput(f"line {lineno}: duplicate edge {norm(u, v)}")
        g.add_edge(u, v)
        count += 1
    if count != m:
        raise ParseError(f"header announces {m} edges but the file lists {count}")
    return g


def format_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges()))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> tuple[int, dict[Edge, int]]:
    rows = _content_lines(text.splitlines())
    try:
        lineno, head = next(rows)
    except StopIteration:
        raise ParseError("empty coloring file") from None
    if len(head) != 2 or head[0] != "c":
        raise ParseError(f"line {lineno}: expected header 'c <k>'")
    (k,) = _ints(head[1:], lineno)
    if k < 1:
        raise ParseError(f"line {lineno}: k must be positive")
    assignment: dict[Edge, int] = {}
    for lineno, fields in rows:
        if len(fields) != 3:
            raise ParseError(f"line {lineno}: expected '<u> <v> <color>'")
        u, v, c = _ints(fields, lineno)
        if u == v:
            raise NonSimpleInput(f"line {lineno}: self-loop at {u}")
        e = norm(u, v)
        if e in assignment:
            raise NonSimpleInput(f"line {lineno}: edge {e} colored twice")
        if not 1 <= c <= k:
            raise ParseError(f"line {lineno}: color {c} outside 1..{k}")
        assignment[e] = c
    return k, assignment


def format_coloring(col: LinearColoring | Mapping[Edge, int], k: int | None = None) -> str:
    if isinstance(col, LinearColoring):
        k = col.k if k is None else k
        items = col.assignment()
    else:
        if k is None:
            raise ValueError("k is required for a plain assignment")
        items = {norm(*e): c for e, c in col.items()}
    lines = [f"c {k}"]
    lines.extend(f"{u} {v} {c}" for (u, v), c in sorted(items.items()))
    return "\n".join(lines) + "\n"


def read_graph(fh: TextIO) -> Graph:
    return parse_graph(fh.read())


def read_coloring(fh: TextIO) -> tuple[int, dict[Edge, int]]:
    return parse_coloring(fh.read())
