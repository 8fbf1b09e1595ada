"""Rich lines: brute-force oracle, deterministic engine and the sampling engine.

A line is lambda-rich for S when it contains at least lambda points of S.
All three engines return a ``RichLineReport`` whose counts are exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import ceil, gcd, log, sqrt

import numpy as np

from . import _kernels
from .geometry import CanonicalLine, PointSet, PreconditionError, incidences, line_through
from .sampling import Rng, as_rng, pair_indices, subset_indices


class Regime(enum.Enum):
    DETERMINISTIC_SMALL = "DETERMINISTIC_SMALL"
    DIRECT_FILTER = "DIRECT_FILTER"
    SUBSAMPLE_LOW = "SUBSAMPLE_LOW"
    SUBSAMPLE_HIGH = "SUBSAMPLE_HIGH"


@dataclass(frozen=True)
class RandomizedParams:
    """Parameters of one sampling run; fields unused by a regime are None."""

    n: int
    lam: int
    regime: Regime
    x: int | None = None
    m: int | None = None
    y: float | None = None
    z: float | None = None


@dataclass(frozen=True)
class RichLineReport:
    lines: tuple = ()  # ((CanonicalLine, count), ...) sorted by line
    lam: int = 2
    n: int = 0
    aborted: bool = False
    regime: Regime | None = None
    params: RandomizedParams | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    @property
    def line_set(self) -> frozenset:
        return frozenset(l for l, _ in self.lines)

    def counts(self) -> dict:
        return dict(self.lines)

    def same_lines(self, other: "RichLineReport") -> bool:
        return self.lines == other.lines


def _report(found: dict, lam: int, n: int, **kw) -> RichLineReport:
    return RichLineReport(tuple(sorted(found.items())), lam, n, **kw)


def _check_lambda(lam) -> int:
    if isinstance(lam, bool) or not isinstance(lam, (int, np.integer)):
        raise PreconditionError(f"lambda must be an integer, got {lam!r}")
    lam = int(lam)
    if lam < 2:
        raise PreconditionError(f"lambda must be >= 2, got {lam}")
    return lam


def rich_lines_brute(S: PointSet, lam: int) -> RichLineReport:
    """Enumerate every pair, group by canonical line, count distinct members."""
    lam = _check_lambda(lam)
    members: dict = {}
    pts = list(S)
    for i in range(len(pts)):
        p = pts[i]
        for j in range(i + 1, len(pts)):
            l = line_through(p, pts[j])
            grp = members.get(l)
            if grp is None:
                members[l] = {i, j}
            else:
                grp.add(i)
                grp.add(j)
    found = {l: len(g) for l, g in members.items() if len(g) >= lam}
    return _report(found, lam, len(S))


def _det_python(S: PointSet, lam: int) -> dict:
    pts = sorted(S)
    found: dict = {}
    need = lam - 1
    for i in range(len(pts) - need):
        px, py = pts[i]
        groups: dict = {}
        for qx, qy in pts[i + 1 :]:
            dx, dy = qx - px, qy - py
            g = gcd(dx, dy)
            key = (dx // g, dy // g)
            groups[key] = groups.get(key, 0) + 1
        for (dx, dy), cnt in groups.items():
            if cnt >= need:
                l = line_through((px, py), (px + dx, py + dy))
                if cnt + 1 > found.get(l, 0):
                    found[l] = cnt + 1
    return found


def _det_found(S: PointSet, lam: int) -> dict:
    if len(S) < lam:
        return {}
    if not S.int64_safe:
        return _det_python(S, lam)
    xs, ys = S.arrays
    found: dict = {}
    for i, j, cnt in _kernels.rich_line_witnesses(xs, ys, lam):
        l = line_through(S[i], S[j])
        if cnt > found.get(l, 0):
            found[l] = cnt
    return found


def rich_lines_det(S: PointSet, lam: int) -> RichLineReport:
    """Exact rich lines by anchor-point direction grouping.

    Points are visited in (x, y) order; each anchor groups the points after it
    by primitive direction.  A group of t points yields a line with t+1
    points, and the count seen from a line's first point is its exact count.
    """
    lam = _check_lambda(lam)
    return _report(_det_found(S, lam), lam, len(S))


def compute_params(n: int, lam: int) -> RandomizedParams:
    if n < 3:
        raise PreconditionError(f"need n >= 3, got {n}")
    lam = _check_lambda(lam)
    if lam > n:
        raise PreconditionError(f"lambda must be in [2, n]; got lambda={lam}, n={n}")
    ln = log(n)
    if lam < ln:
        return RandomizedParams(n, lam, Regime.DETERMINISTIC_SMALL)
    x = ceil(10 * n * n * ln / (lam * lam))
    if lam <= 140 * ln**1.5:
        return RandomizedParams(n, lam, Regime.DIRECT_FILTER, x=x)
    m = ceil(140 * n * ln / lam)
    y = 98 * ln
    if lam < 5 * sqrt(n):
        return RandomizedParams(n, lam, Regime.SUBSAMPLE_LOW, x, m, y, 2500 * n * n / lam**3)
    return RandomizedParams(n, lam, Regime.SUBSAMPLE_HIGH, x, m, y, 5 * n / lam)


def rich_lines_rand(S: PointSet, lam: int, rng: Rng | None = None) -> RichLineReport:
    """Monte Carlo rich lines: never reports a line that is not lambda-rich.

    With probability at least 1 - 3/n^2 the report is the full rich set.  If
    the subsample keeps more than z candidates the run gives up and returns
    an empty report with ``aborted=True``.
    """
    params = compute_params(len(S), lam)
    return run_with_params(S, params, as_rng(rng))


def _sample_lines(S: PointSet, x: int, rng: Rng):
    """Distinct lines through x sampled pairs, each with one point on it."""
    i, j = pair_indices(len(S), x, rng)
    if S.int64_safe:
        xs, ys = S.arrays
        a, b, c = _kernels.canonical_lines(xs[i], ys[i], xs[j], ys[j])
        key = np.stack([a, b, c], axis=1)
        uniq, first = np.unique(key, axis=0, return_index=True)
        return uniq, i[first]
    lines: dict = {}
    for u, v in zip(i.tolist(), j.tolist()):
        lines.setdefault(line_through(S[u], S[v]), u)
    return list(lines.items()), None


def _exact_counts(S: PointSet, lines, anchors, target: PointSet | None = None):
    """Counts of ``lines`` on ``target`` (default S); anchors index into S."""
    T = S if target is None else target
    if anchors is None:
        return [cnt for _, cnt in incidences([l for l, _ in lines], T)]
    xs, ys = S.arrays
    tx, ty = T.arrays
    return _kernels.count_on_lines(
        lines[:, 0], lines[:, 1], lines[:, 2], xs[anchors], ys[anchors], tx, ty
    ).tolist()


def _as_found(lines, anchors, counts, lam) -> dict:
    out = {}
    for k, cnt in enumerate(counts):
        if cnt >= lam:
            l = lines[k][0] if anchors is None else CanonicalLine._make(map(int, lines[k]))
            out[l] = int(cnt)
    return out


def _take(lines, anchors, mask):
    if anchors is None:
        return [l for l, keep in zip(lines, mask) if keep], None
    sel = np.asarray(mask, dtype=bool)
    return lines[sel], anchors[sel]


def run_with_params(S: PointSet, params: RandomizedParams, rng: Rng) -> RichLineReport:
    """Execute the sampling engine with explicit parameters.

    ``rich_lines_rand`` derives ``params`` from (n, lambda); tests also pass
    hand-built parameters to drive the subsample branch at small n.
    """
    lam, n = params.lam, len(S)
    regime = params.regime
    if regime is Regime.DETERMINISTIC_SMALL:
        return _report(_det_found(S, lam), lam, n, regime=regime, params=params)

    lines, anchors = _sample_lines(S, params.x, rng)
    if regime is Regime.DIRECT_FILTER:
        counts = _exact_counts(S, lines, anchors)
        return _report(_as_found(lines, anchors, counts, lam), lam, n, regime=regime, params=params)

    m = min(params.m, n)
    sub = S.subset(subset_indices(n, m, rng).tolist())
    sub_counts = _exact_counts(S, lines, anchors, sub)
    keep = [cnt >= params.y for cnt in sub_counts]
    if sum(keep) > params.z:
        return RichLineReport((), lam, n, aborted=True, regime=regime, params=params)
    lines, anchors = _take(lines, anchors, keep)
    counts = _exact_counts(S, lines, anchors)
    return _report(_as_found(lines, anchors, counts, lam), lam, n, regime=regime, params=params)


_ENGINES = {"brute": rich_lines_brute, "det": rich_lines_det}


def rich_lines(S: PointSet, lam: int, algo: str = "rand", rng: Rng | None = None) -> RichLineReport:
    """Dispatch by engine name: rand, det or brute."""
    if algo == "rand":
        return rich_lines_rand(S, lam, rng)
    try:
        return _ENGINES[algo](S, lam)
    except KeyError:
        raise ValueError(f"unknown rich-lines algorithm {algo!r}") from None
