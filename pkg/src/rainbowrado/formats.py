"""Text formats for matrices, colorings and graphs.

matrix:   "m d", then m lines of d rationals ("p", "-p" or "p/q", q > 0)
coloring: "N k", then one line of N colors in 1..k
graph:    "n m", then m lines "tail head" (1-indexed)
"""

from __future__ import annotations

import re
from fractions import Fraction

from .colorings import Coloring
from .graphs import OrientedGraph
from .linalg import Matrix

_RATIONAL = re.compile(r"-?\d+(/\d+)?\Z")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(line: str):
    """(column, token) pairs, columns 1-based."""
    return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", line)]


def _content_lines(text: str):
    return [(i, line) for i, line in enumerate(text.splitlines(), 1) if line.strip()]


def _header(lines, names):
    if not lines:
        raise ParseError("empty input", 1)
    lineno, line = lines[0]
    toks = _tokens(line)
    if len(toks) != len(names):
        raise ParseError(f"header must be '{' '.join(names)}'", lineno)
    vals = []
    for (col, tok), name in zip(toks, names):
        if not tok.isdigit():
            raise ParseError(f"{name} must be a nonnegative integer, got {tok!r}", lineno, col)
        vals.append(int(tok))
    return vals


def _int_token(tok, lineno, col, what):
    if not re.fullmatch(r"-?\d+", tok):
        raise ParseError(f"{what} must be an integer, got {tok!r}", lineno, col)
    return int(tok)


def parse_rational(tok: str, lineno: int = 1, col: int = 1) -> Fraction:
    if not _RATIONAL.match(tok):
        raise ParseError(f"not a rational 'p', '-p' or 'p/q': {tok!r}", lineno, col)
    if "/" in tok and int(tok.split("/")[1]) == 0:
        raise ParseError(f"zero denominator in {tok!r}", lineno, col)
    return Fraction(tok)


def parse_matrix(text: str) -> Matrix:
    lines = _content_lines(text)
    m, d = _header(lines, ("m", "d"))
    if d == 0 and len(lines) == 1:
        # Rows of an m x 0 matrix are blank lines.
        return Matrix.zeros(m, 0)
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} rows, found {len(lines) - 1}", lines[-1][0] + 1)
    rows = []
    for lineno, line in lines[1:]:
        toks = _tokens(line)
        if len(toks) != d:
            raise ParseError(f"expected {d} entries, found {len(toks)}", lineno)
        rows.append([parse_rational(t, lineno, c) for c, t in toks])
    return Matrix.from_rows(rows, d)


def dump_matrix(M: Matrix) -> str:
    if M.ncols == 0:
        return f"{M.nrows} 0\n"
    out = [f"{M.nrows} {M.ncols}"]
    out += [" ".join(str(x) for x in row) for row in M.rows]
    return "\n".join(out) + "\n"


def parse_coloring(text: str) -> Coloring:
    lines = _content_lines(text)
    N, k = _header(lines, ("N", "k"))
    if len(lines) != 2:
        raise ParseError("expected exactly one line of colors", lines[-1][0] + 1)
    lineno, line = lines[1]
    toks = _tokens(line)
    if len(toks) != N:
        raise ParseError(f"expected {N} colors, found {len(toks)}", lineno)
    colors = []
    for col, tok in toks:
        c = _int_token(tok, lineno, col, "color")
        if not 1 <= c <= k:
            raise ParseError(f"color {c} outside 1..{k}", lineno, col)
        colors.append(c)
    try:
        return Coloring(N, k, tuple(colors))
    except ValueError as e:
        raise ParseError(str(e), lineno) from None


def dump_coloring(c: Coloring) -> str:
    return f"{c.N} {c.k}\n" + " ".join(str(x) for x in c.assign) + "\n"


def parse_graph(text: str) -> OrientedGraph:
    lines = _content_lines(text)
    n, m = _header(lines, ("n", "m"))
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edges, found {len(lines) - 1}", lines[-1][0] + 1)
    edges = []
    for lineno, line in lines[1:]:
        toks = _tokens(line)
        if len(toks) != 2:
            raise ParseError("edge line must be 'tail head'", lineno)
        ends = []
        for col, tok in toks:
            v = _int_token(tok, lineno, col, "vertex")
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside 1..{n}", lineno, col)
            ends.append(v - 1)
        if ends[0] == ends[1]:
            raise ParseError("self-loops are not allowed", lineno)
        edges.append(tuple(ends))
    return OrientedGraph(n, tuple(edges))


def dump_graph(G: OrientedGraph) -> str:
    out = [f"{G.n} {G.m}"] + [f"{u + 1} {v + 1}" for u, v in G.edges]
    return "\n".join(out) + "\n"
