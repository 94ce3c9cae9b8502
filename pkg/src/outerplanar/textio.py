"""Text formats for graphs and embeddings.

Edge-list: first data line `n m`, then m lines `u v` (0-based). Embedding:
line 1 `n`, line 2 the outer order, then one chord `i j` (polygon positions)
per line. `#` starts a comment anywhere on a line; blank lines are skipped.
Parse errors carry 1-based line numbers.
"""

from __future__ import annotations

from .embedding import OuterplaneEmbedding
from .graphs import Graph, GraphInputError, build_graph

__all__ = [
    "ParseError",
    "parse_edge_list",
    "format_edge_list",
    "parse_embedding",
    "format_embedding",
]


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _data_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield line_no, body


def _ints(line_no: int, body: str, expect: int, what: str) -> list[int]:
    parts = body.split()
    if len(parts) != expect:
        raise ParseError(line_no, f"expected {expect} {what}, got {len(parts)}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(line_no, f"non-integer token in {body!r}") from None


def parse_edge_list(text: str) -> Graph:
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError(1, "empty input: expected header `n m`")
    line_no, body = lines[0]
    n, m = _ints(line_no, body, 2, "header fields `n m`")
    if n < 0 or m < 0:
        raise ParseError(line_no, f"negative header values n={n} m={m}")
    if len(lines) - 1 != m:
        raise ParseError(line_no, f"header promises {m} edges, file has {len(lines) - 1}")
    edges = []
    for line_no, body in lines[1:]:
        u, v = _ints(line_no, body, 2, "edge endpoints")
        if u == v:
            raise ParseError(line_no, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(line_no, f"edge ({u}, {v}) out of range for n={n}")
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except GraphInputError as exc:  # unreachable given the per-line checks
        raise ParseError(1, str(exc)) from None


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_embedding(text: str) -> OuterplaneEmbedding:
    lines = list(_data_lines(text))
    if len(lines) < 2:
        raise ParseError(1, "embedding needs at least two lines: `n` and the outer order")
    line_no, body = lines[0]
    (n,) = _ints(line_no, body, 1, "order")
    if n < 3:
        raise ParseError(line_no, f"embedding order must be at least 3, got {n}")
    line_no, body = lines[1]
    outer = _ints(line_no, body, n, "outer-order ids")
    if sorted(outer) != list(range(n)):
        raise ParseError(line_no, "outer order is not a permutation of 0..n-1")
    chords = []
    for line_no, body in lines[2:]:
        i, j = _ints(line_no, body, 2, "chord positions")
        if not (0 <= i < j < n) or j - i < 2 or (i, j) == (0, n - 1):
            raise ParseError(line_no, f"invalid chord positions ({i}, {j})")
        chords.append((i, j))
    return OuterplaneEmbedding(outer=tuple(outer), chords=tuple(sorted(chords)))


def format_embedding(emb: OuterplaneEmbedding) -> str:
    lines = [str(emb.n), " ".join(str(v) for v in emb.outer)]
    lines.extend(f"{i} {j}" for i, j in emb.chords)
    return "\n".join(lines) + "\n"
