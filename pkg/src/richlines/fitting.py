"""Exact fitting: a line through the maximum number of points."""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import CanonicalLine, PointSet, PreconditionError, incidences, line_through
from .rich import RichLineReport, rich_lines_det, rich_lines_rand
from .sampling import Rng, as_rng


@dataclass(frozen=True)
class FitResult:
    line: CanonicalLine
    count: int


def _probe(S: PointSet, lam: int, mode: str, rng: Rng, tag: int) -> RichLineReport:
    if mode == "det" or len(S) < 3:
        return rich_lines_det(S, lam)
    rep = rich_lines_rand(S, lam, rng.child(tag))
    if rep.aborted:
        # Retry an aborted probe once, deterministically.
        return rich_lines_det(S, lam)
    return rep


def exact_fit(S: PointSet, mode: str = "det", rng: Rng | None = None) -> FitResult:
    """Binary search on lambda over rich-line reports.

    Invariant: some reported line has >= lo points, and every probe above hi
    came back empty.  In ``rand`` mode a probe can miss a rich line, so the
    answer is the maximum with high probability; its count is always exact.
    """
    if mode not in ("det", "rand"):
        raise ValueError(f"mode must be 'det' or 'rand', got {mode!r}")
    n = len(S)
    if n < 2:
        raise PreconditionError(f"exact fitting needs at least 2 points, got {n}")
    if n == 2:
        return FitResult(line_through(S[0], S[1]), 2)
    rng = as_rng(rng)
    lo, hi = 2, n
    best: RichLineReport | None = None
    tag = 0
    while lo < hi:
        mid = (lo + hi + 1) // 2
        rep = _probe(S, mid, mode, rng, tag)
        tag += 1
        if rep.lines:
            best = rep
            lo = max(cnt for _, cnt in rep.lines)
        else:
            hi = mid - 1
    if best is None or max(cnt for _, cnt in best.lines) < lo:
        best = _probe(S, lo, mode, rng, tag)
    top = max(cnt for _, cnt in best.lines)
    line = min(l for l, cnt in best.lines if cnt == top)
    ((line, count),) = incidences([line], S)
    return FitResult(line, count)
