"""Plain-text formats.

cgraph files::

    cgraph p=3 n=3
    0 1 1
    0 2 1
    1 2 2

One ``u v color`` line per colored edge with u < v; absent pairs are white.
Blank lines and ``#`` comments are ignored on input. Output lists edges in
lexicographic order.

Assignment matrices are whitespace-separated integer grids, one row per line.
"""

from __future__ import annotations

import re
from typing import Iterable, Optional

import numpy as np

from .apply import AssignmentMatrix, PlanePacking
from .core import CGraph
from .errors import NotPrime, ParseError
from .field import make_modulus

__all__ = [
    "parse_cgraph",
    "format_cgraph",
    "read_cgraph",
    "format_packing",
    "parse_matrix",
    "format_matrix",
]

_HEADER = re.compile(r"^cgraph\s+p=(\d+)\s+n=(\d+)$")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_cgraph(text: str) -> CGraph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input, expected 'cgraph p=<prime> n=<count>'") from None
    m = _HEADER.match(header)
    if not m:
        raise ParseError(f"bad header {header!r}, expected 'cgraph p=<prime> n=<count>'", lineno)
    p, n = int(m.group(1)), int(m.group(2))
    try:
        modulus = make_modulus(p)
    except NotPrime:
        raise ParseError(f"p={p} is not prime", lineno) from None
    if n < 1:
        raise ParseError("n must be at least 1", lineno)
    edges = {}
    for lineno, line in lines:
        fields = line.split()
        if len(fields) != 3 or not all(re.fullmatch(r"-?\d+", f) for f in fields):
            raise ParseError(f"expected '<u> <v> <color>', got {line!r}", lineno)
        u, v, c = map(int, fields)
        if not 0 <= u < v < n:
            raise ParseError(f"need 0 <= u < v < {n}, got {u} {v}", lineno)
        if not 1 <= c <= p - 1:
            raise ParseError(f"color {c} outside 1..{p - 1}", lineno)
        if (u, v) in edges:
            raise ParseError(f"pair {u} {v} listed twice", lineno)
        edges[(u, v)] = c
    return CGraph.from_edges(n, modulus, edges)


def format_cgraph(g: CGraph, comments: Iterable[str] = ()) -> str:
    out = [f"cgraph p={g.p} n={g.m}"]
    out.extend(f"# {c}" for c in comments)
    out.extend(f"{u} {v} {c}" for u, v, c in g.edges())
    return "\n".join(out) + "\n"


def read_cgraph(path) -> CGraph:
    with open(path) as fh:
        return parse_cgraph(fh.read())


def format_packing(pk: PlanePacking, p: Optional[int] = None) -> str:
    return format_cgraph(pk.to_cgraph(p), comments=[f"plane order={pk.order}"])


def parse_matrix(text: str) -> AssignmentMatrix:
    rows = []
    for lineno, line in _content_lines(text):
        try:
            rows.append([int(x) for x in line.split()])
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", lineno) from None
        if len(rows[-1]) != len(rows[0]):
            raise ParseError(f"row has {len(rows[-1])} entries, expected {len(rows[0])}", lineno)
    if not rows:
        raise ParseError("empty matrix")
    try:
        return AssignmentMatrix(np.array(rows, dtype=np.int64))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_matrix(mat: AssignmentMatrix) -> str:
    return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in mat.entries)
