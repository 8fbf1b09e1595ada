"""Exact integer points, canonical lines and incidence counting.

Every predicate here is evaluated with Python integers, so collinearity is
decided exactly.  Coordinates are bounded by ``COORD_LIMIT`` so that line
coefficients satisfy |a|, |b| <= 2**32 and |c| <= 2**64, and the membership
dot product fits comfortably in 128-bit signed arithmetic.
"""

from __future__ import annotations

from collections import namedtuple
from math import gcd
from typing import Iterable, Iterator, Sequence

import numpy as np

COORD_LIMIT = 2**31 - 1

# Below this magnitude every coefficient and dot product fits in int64.
INT64_SAFE_COORD = 2**30


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class IdenticalPointsError(GeometryError):
    pass


class DuplicatePointError(GeometryError):
    pass


class CoordinateBoundError(GeometryError):
    pass


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class Point(namedtuple("Point", "x y")):
    __slots__ = ()

    def __new__(cls, x, y):
        if not (isinstance(x, (int, np.integer)) and isinstance(y, (int, np.integer))):
            raise TypeError(f"point coordinates must be integers, got ({x!r}, {y!r})")
        x, y = int(x), int(y)
        if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
            raise CoordinateBoundError(
                f"coordinate out of range: ({x}, {y}); |coord| must be <= {COORD_LIMIT}"
            )
        return super().__new__(cls, x, y)


class CanonicalLine(namedtuple("CanonicalLine", "a b c")):
    """The line a*x + b*y + c = 0 in normalized form.

    gcd(|a|, |b|, |c|) == 1 and either a > 0, or a == 0 and b > 0, so each
    geometric line has exactly one representation.  Tuple ordering gives the
    lexicographic (a, b, c) order used for tie-breaking.
    """

    __slots__ = ()

    def __new__(cls, a, b, c):
        a, b, c = int(a), int(b), int(c)
        if a == 0 and b == 0:
            raise GeometryError("(a, b) must not both be zero")
        g = gcd(gcd(a, b), c)
        a, b, c = a // g, b // g, c // g
        if a < 0 or (a == 0 and b < 0):
            a, b, c = -a, -b, -c
        return super().__new__(cls, a, b, c)

    def __call__(self, p: Point) -> int:
        return self.a * p[0] + self.b * p[1] + self.c


class PointSet(Sequence):
    """Immutable, ordered collection of pairwise-distinct points."""

    __slots__ = ("_points", "_index", "_arrays")

    def __init__(self, points: Iterable = ()):
        pts = tuple(p if isinstance(p, Point) else Point(*p) for p in points)
        index = {}
        for i, p in enumerate(pts):
            if p in index:
                raise DuplicatePointError(
                    f"duplicate point ({p.x}, {p.y}) at positions {index[p]} and {i}"
                )
            index[p] = i
        self._points = pts
        self._index = index
        self._arrays = None

    @classmethod
    def _trusted(cls, points: tuple) -> "PointSet":
        # Caller guarantees distinct, validated Points (e.g. a subset of a PointSet).
        obj = cls.__new__(cls)
        obj._points = points
        obj._index = {p: i for i, p in enumerate(points)}
        obj._arrays = None
        return obj

    def __len__(self) -> int:
        return len(self._points)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return PointSet._trusted(self._points[i])
        return self._points[i]

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._index

    def __eq__(self, other) -> bool:
        if isinstance(other, PointSet):
            return self._points == other._points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        if len(self) <= 6:
            return f"PointSet({list(map(tuple, self._points))})"
        return f"PointSet(<{len(self)} points>)"

    def index(self, p) -> int:
        return self._index[tuple(p)]

    def subset(self, indices: Iterable[int]) -> "PointSet":
        return PointSet._trusted(tuple(self._points[i] for i in indices))

    def as_set(self) -> frozenset:
        return frozenset(self._points)

    @property
    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Coordinates as two int64 arrays (cached)."""
        if self._arrays is None:
            xs = np.fromiter((p[0] for p in self._points), dtype=np.int64, count=len(self))
            ys = np.fromiter((p[1] for p in self._points), dtype=np.int64, count=len(self))
            xs.flags.writeable = False
            ys.flags.writeable = False
            self._arrays = (xs, ys)
        return self._arrays

    @property
    def int64_safe(self) -> bool:
        """True if vectorized int64 kernels are exact for this set."""
        if not self._points:
            return True
        xs, ys = self.arrays
        return bool(
            np.abs(xs).max() < INT64_SAFE_COORD and np.abs(ys).max() < INT64_SAFE_COORD
        )


def line_through(p, q) -> CanonicalLine:
    px, py = p
    qx, qy = q
    if px == qx and py == qy:
        raise IdenticalPointsError(f"cannot form a line from identical points ({px}, {py})")
    a = qy - py
    b = px - qx
    g = gcd(a, b)
    a //= g
    b //= g
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    # gcd(a, b) == 1 already, so c needs no further reduction.
    c = -(a * px + b * py)
    return tuple.__new__(CanonicalLine, (a, b, c))


def contains(line, p) -> bool:
    a, b, c = line
    return a * p[0] + b * p[1] + c == 0


def _int64_dot_safe(lines: Sequence, S: PointSet) -> bool:
    if not lines or not len(S):
        return True
    xs, ys = S.arrays
    mx = int(np.abs(xs).max())
    my = int(np.abs(ys).max())
    ma = max(abs(l[0]) for l in lines)
    mb = max(abs(l[1]) for l in lines)
    mc = max(abs(l[2]) for l in lines)
    return ma * mx + mb * my + mc < 2**62


def _scan_counts_np(coef: np.ndarray, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    counts = np.empty(len(coef), dtype=np.int64)
    chunk = max(1, 4_000_000 // max(1, len(xs)))
    for lo in range(0, len(coef), chunk):
        blk = coef[lo : lo + chunk]
        vals = blk[:, 0:1] * xs + blk[:, 1:2] * ys + blk[:, 2:3]
        counts[lo : lo + chunk] = np.count_nonzero(vals == 0, axis=1)
    return counts


def incidences(lines: Sequence, S: PointSet) -> list[tuple[CanonicalLine, int]]:
    """Exact count of points of ``S`` on each line, in input order.

    This is a direct O(|lines| * |S|) membership scan.
    """
    lines = [l if isinstance(l, CanonicalLine) else CanonicalLine(*l) for l in lines]
    if not lines:
        return []
    if not len(S):
        return [(l, 0) for l in lines]
    if _int64_dot_safe(lines, S):
        xs, ys = S.arrays
        coef = np.array(lines, dtype=np.int64)
        counts = _scan_counts_np(coef, xs, ys).tolist()
    else:
        counts = [sum(1 for p in S if contains(l, p)) for l in lines]
    return list(zip(lines, counts))


def covered_mask(lines: Sequence, S: PointSet) -> list[bool]:
    """Per point of ``S``: is it on at least one of ``lines``?"""
    if not lines or not len(S):
        return [False] * len(S)
    lines = list(lines)
    if _int64_dot_safe(lines, S):
        xs, ys = S.arrays
        hit = np.zeros(len(S), dtype=bool)
        for a, b, c in lines:
            hit |= a * xs + b * ys + c == 0
        return hit.tolist()
    return [any(contains(l, p) for l in lines) for p in S]


def covered_subset(lines: Sequence, S: PointSet) -> tuple[PointSet, PointSet]:
    """Split ``S`` into (covered, uncovered) by ``lines``, preserving order."""
    mask = covered_mask(lines, S)
    covered = tuple(p for p, m in zip(S, mask) if m)
    uncovered = tuple(p for p, m in zip(S, mask) if not m)
    return PointSet._trusted(covered), PointSet._trusted(uncovered)


def incidence_bound(m: int, n: int) -> float:
    """Upper bound on total incidences between m lines and n points."""
    return 2.5 * (m * n) ** (2.0 / 3.0) + m + n
