"""Ground truth: a small exact Line Cover solver and instance generators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd
from typing import Sequence

import numpy as np

from .geometry import (
    COORD_LIMIT,
    CanonicalLine,
    PointSet,
    PreconditionError,
    covered_subset,
    line_through,
)
from .rich import rich_lines_det
from .sampling import Rng, as_rng

SOLVER_MAX_POINTS = 60
SOLVER_MAX_K = 5
RETRY_BUDGET = 1000
# Above this many points the filler of gen_planted_rich is not checked for
# general position (the exact check is quadratic).
EXACT_FILLER_LIMIT = 5000


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class GroundTruth:
    yes: bool
    witness: tuple = ()
    reason: str = ""


@dataclass(frozen=True)
class CoverInstance:
    points: PointSet
    k: int
    ground_truth: GroundTruth | None = None

    def verify(self) -> bool:
        """Re-check a YES witness exactly; NO truths are taken as given."""
        gt = self.ground_truth
        if gt is None or not gt.yes:
            return True
        _, rest = covered_subset(gt.witness, self.points)
        return len(gt.witness) <= self.k and len(rest) == 0


@dataclass(frozen=True)
class CoverAnswer:
    yes: bool
    lines: tuple = ()


def _singletons(pts) -> list:
    # One horizontal line per distinct y; at most one line per point.
    return sorted({CanonicalLine(0, 1, -y) for _, y in pts})


def _solve(pts: tuple, k: int):
    if len(pts) <= k:
        return _singletons(pts)
    if k == 0:
        return None
    S = PointSet._trusted(pts)
    forced = [l for l, _ in rich_lines_det(S, k + 1).lines]
    if forced:
        # A line through more than k points lies in every k-cover.
        if len(forced) > k:
            return None
        _, rest = covered_subset(forced, S)
        sub = _solve(tuple(rest), k - len(forced))
        return None if sub is None else forced + sub
    if len(pts) > k * k:
        return None
    p = pts[0]
    for l in sorted({line_through(p, q) for q in pts[1:]}):
        _, rest = covered_subset([l], S)
        sub = _solve(tuple(rest), k - 1)
        if sub is not None:
            return [l] + sub
    return None


def solve_cover(S: PointSet, k: int, *, bounded: bool = True) -> CoverAnswer:
    """Exact Line Cover decision by bounded branching.

    Lines through more than k points are forced first; then the first
    remaining point is branched over the lines joining it to each other
    remaining point.  ``bounded`` enforces the desk-scale input limits.
    """
    if k < 0:
        raise PreconditionError(f"k must be nonnegative, got {k}")
    if bounded and (len(S) > SOLVER_MAX_POINTS or k > SOLVER_MAX_K):
        raise PreconditionError(
            f"solver limited to |S| <= {SOLVER_MAX_POINTS} and k <= {SOLVER_MAX_K}; "
            f"got |S|={len(S)}, k={k}"
        )
    sol = _solve(tuple(S), k)
    if sol is None:
        return CoverAnswer(False)
    return CoverAnswer(True, tuple(sol))


def gen_grid(rows: int, cols: int) -> PointSet:
    if rows < 1 or cols < 1:
        raise PreconditionError(f"grid needs rows, cols >= 1, got {rows}x{cols}")
    return PointSet((x, y) for y in range(rows) for x in range(cols))


def _primitive_direction(gen, max_step: int, bound: int = 0, count: int = 0) -> tuple[int, int]:
    if count > 1:
        # keep count points of the line inside the box
        max_step = max(1, min(max_step, (bound // 2) // -(-(count - 1) // 2)))
    while True:
        dx = int(gen.integers(0, max_step + 1))
        dy = int(gen.integers(-max_step, max_step + 1))
        if (dx, dy) != (0, 0) and gcd(dx, dy) == 1 and (dx > 0 or dy > 0):
            return dx, dy


def _intersection(l1, l2):
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    return Fraction(b1 * c2 - b2 * c1, det), Fraction(c1 * a2 - c2 * a1, det)


def _line_points(gen, direction, bound: int, count: int) -> list[tuple[int, int]]:
    dx, dy = direction
    half = bound // 2
    bx = int(gen.integers(-half, half + 1))
    by = int(gen.integers(-half, half + 1))
    span = half // max(abs(dx), abs(dy))
    if 2 * span + 1 < count:
        raise GenerationError(f"coord_bound {bound} too small for {count} points per line")
    ts = gen.choice(2 * span + 1, size=count, replace=False) - span
    return [(bx + int(t) * dx, by + int(t) * dy) for t in ts]


def gen_planted_cover(
    k: int,
    per_line: int | Sequence[int],
    coord_bound: int = 2**20,
    rng: Rng | None = None,
    max_step: int = 6,
) -> CoverInstance:
    """k distinct planted lines, no three through a common point.

    ``per_line`` is a count shared by all lines or one count per line.
    Points lying on two planted lines appear once.  The point order is
    shuffled so batches mix lines.
    """
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    counts = [per_line] * k if isinstance(per_line, int) else list(per_line)
    if len(counts) != k or min(counts) < 2:
        raise PreconditionError("per_line must be >= 2 for each of the k lines")
    if not 1 <= coord_bound <= COORD_LIMIT:
        raise PreconditionError(f"coord_bound must be in [1, {COORD_LIMIT}]")
    gen = as_rng(rng).generator
    lines: list = []
    crossings: list = []
    pts: dict = {}
    for cnt in counts:
        for _ in range(RETRY_BUDGET):
            direction = _primitive_direction(gen, max_step, coord_bound, cnt)
            cand = _line_points(gen, direction, coord_bound, cnt)
            line = line_through(cand[0], cand[1])
            if line in lines:
                continue
            a, b, c = line
            if any(a * x + b * y + c == 0 for x, y in crossings):
                continue
            new = [_intersection(line, l) for l in lines]
            new = [p for p in new if p is not None]
            if len(set(new)) < len(new) or set(new) & set(crossings):
                continue
            break
        else:
            raise GenerationError("could not place a planted line within the retry budget")
        lines.append(line)
        crossings.extend(new)
        for p in cand:
            pts.setdefault(p, None)
    order = gen.permutation(len(pts))
    plist = list(pts)
    S = PointSet(plist[i] for i in order.tolist())
    inst = CoverInstance(S, k, GroundTruth(True, tuple(lines)))
    if not inst.verify():
        raise GenerationError("planted witness failed verification")
    return inst


class _GeneralPosition:
    """Incrementally grown point set rejecting points that create collinear triples."""

    def __init__(self, capacity: int):
        self.xs = np.empty(capacity, dtype=np.int64)
        self.ys = np.empty(capacity, dtype=np.int64)
        self.size = 0
        self.seen: set = set()

    def add_unchecked(self, x: int, y: int):
        self.xs[self.size] = x
        self.ys[self.size] = y
        self.size += 1
        self.seen.add((x, y))

    def try_add(self, x: int, y: int) -> bool:
        if (x, y) in self.seen:
            return False
        if self.size >= 2:
            dx = self.xs[: self.size] - x
            dy = self.ys[: self.size] - y
            g = np.gcd(dx, dy)
            dx //= g
            dy //= g
            flip = (dx < 0) | ((dx == 0) & (dy < 0))
            dx[flip] = -dx[flip]
            dy[flip] = -dy[flip]
            key = np.sort(dx * (1 << 33) + dy)
            if np.any(key[1:] == key[:-1]):
                return False
        self.add_unchecked(x, y)
        return True


def gen_general_position(
    n: int, coord_bound: int = 2**20, rng: Rng | None = None, k: int | None = None
) -> CoverInstance:
    """n points with no three collinear, by rejection sampling.

    The attached truth is for parameter k (default ceil(n/2) - 1, the largest
    NO value): NO when 2k < n, YES with a pairing witness otherwise.
    """
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if not 1 <= coord_bound <= 2**30:
        raise PreconditionError(f"coord_bound must be in [1, 2**30], got {coord_bound}")
    gen = as_rng(rng).generator
    grow = _GeneralPosition(n)
    while grow.size < n:
        for _ in range(RETRY_BUDGET):
            x, y = (int(v) for v in gen.integers(-coord_bound, coord_bound + 1, size=2))
            if grow.try_add(x, y):
                break
        else:
            raise GenerationError(f"no general-position point found after {RETRY_BUDGET} draws")
    S = PointSet(zip(grow.xs.tolist(), grow.ys.tolist()))
    if k is None:
        k = ceil(n / 2) - 1
    if 2 * k < n:
        truth = GroundTruth(False, reason=f"general position: {k} lines cover at most {2 * k} < {n} points")
    else:
        wit = [line_through(S[i], S[i + 1]) for i in range(0, n - 1, 2)]
        if n % 2:
            wit.append(CanonicalLine(0, 1, -S[n - 1][1]))
        truth = GroundTruth(True, tuple(dict.fromkeys(wit)))
    return CoverInstance(S, k, truth)


def gen_planted_rich(
    n: int, lam: int, coord_bound: int = 2**24, rng: Rng | None = None, max_step: int = 6
) -> PointSet:
    """One line with exactly lam points plus n - lam filler points.

    Filler points never lie on the planted line.  Up to ``EXACT_FILLER_LIMIT``
    points the whole set is grown so that no other line holds three points;
    beyond that filler is drawn uniformly from the box, where a third
    collinear point is unlikely and a lam-rich accidental line is not
    realistic.  The output order is shuffled.
    """
    if not 2 <= lam <= n:
        raise PreconditionError(f"need 2 <= lambda <= n, got lambda={lam}, n={n}")
    if not 1 <= coord_bound <= 2**30:
        raise PreconditionError(f"coord_bound must be in [1, 2**30], got {coord_bound}")
    gen = as_rng(rng).generator
    direction = _primitive_direction(gen, max_step, coord_bound, lam)
    planted = _line_points(gen, direction, coord_bound, lam)
    a, b, c = line_through(planted[0], planted[1])
    if n <= EXACT_FILLER_LIMIT:
        grow = _GeneralPosition(n)
        for x, y in planted:
            grow.add_unchecked(x, y)
        while grow.size < n:
            for _ in range(RETRY_BUDGET):
                x, y = (int(v) for v in gen.integers(-coord_bound, coord_bound + 1, size=2))
                if grow.try_add(x, y):
                    break
            else:
                raise GenerationError(f"no filler point found after {RETRY_BUDGET} draws")
        pts = list(zip(grow.xs.tolist(), grow.ys.tolist()))
    else:
        seen = set(planted)
        pts = list(planted)
        while len(pts) < n:
            draw = gen.integers(-coord_bound, coord_bound + 1, size=(2 * (n - len(pts)), 2))
            for x, y in draw.tolist():
                if len(pts) == n:
                    break
                if a * x + b * y + c == 0 or (x, y) in seen:
                    continue
                seen.add((x, y))
                pts.append((x, y))
    order = gen.permutation(n)
    return PointSet(pts[i] for i in order.tolist())
