"""Text formats for point sets and canonical lines.

Points: one "x y" per line, base-10 integers separated by a single space.
Lines: one "a b c" per line in canonical form.  Lines starting with '#' and
empty lines are skipped.  Writers emit exactly the canonical spelling, so a
parse/write round trip is byte-identical.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable

from .geometry import COORD_LIMIT, CanonicalLine, Point, PointSet

_INT = r"(?:0|-?[1-9][0-9]*)"
_POINT_RE = re.compile(rf"({_INT}) ({_INT})")
_LINE_RE = re.compile(rf"({_INT}) ({_INT}) ({_INT})")


class ParseError(ValueError):
    """Malformed input; ``lineno`` is 1-based, ``kind`` names the failure."""

    def __init__(self, lineno: int, kind: str, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.kind = kind


def _records(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        if raw.endswith("\r"):
            raw = raw[:-1]
        if not raw or raw.startswith("#"):
            continue
        yield lineno, raw


def parse_points(text: str) -> PointSet:
    pts: list = []
    where: dict = {}
    for lineno, raw in _records(text):
        m = _POINT_RE.fullmatch(raw)
        if m is None:
            raise ParseError(lineno, "syntax", f"expected two integers 'x y', got {raw!r}")
        x, y = int(m[1]), int(m[2])
        if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
            raise ParseError(
                lineno, "bound", f"coordinate out of range in {raw!r}; |coord| must be <= {COORD_LIMIT}"
            )
        if (x, y) in where:
            raise ParseError(lineno, "duplicate", f"duplicate point {raw!r} (first on line {where[(x, y)]})")
        where[(x, y)] = lineno
        pts.append(tuple.__new__(Point, (x, y)))
    return PointSet._trusted(tuple(pts))


def write_points(S: Iterable) -> str:
    return "".join(f"{x} {y}\n" for x, y in S)


def parse_lines(text: str) -> list[CanonicalLine]:
    out = []
    for lineno, raw in _records(text):
        m = _LINE_RE.fullmatch(raw)
        if m is None:
            raise ParseError(lineno, "syntax", f"expected three integers 'a b c', got {raw!r}")
        a, b, c = int(m[1]), int(m[2]), int(m[3])
        if a == 0 and b == 0:
            raise ParseError(lineno, "canonical", "a and b must not both be zero")
        line = CanonicalLine(a, b, c)
        if line != (a, b, c):
            raise ParseError(
                lineno, "canonical", f"{raw!r} is not canonical; expected '{line.a} {line.b} {line.c}'"
            )
        out.append(line)
    return out


def write_lines(lines: Iterable) -> str:
    return "".join(f"{a} {b} {c}\n" for a, b, c in lines)


def read_points(path) -> PointSet:
    return parse_points(Path(path).read_text(encoding="utf-8"))


def read_lines(path) -> list[CanonicalLine]:
    return parse_lines(Path(path).read_text(encoding="utf-8"))
