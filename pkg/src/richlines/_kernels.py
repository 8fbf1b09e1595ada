"""Vectorized int64 kernels behind the rich-lines engines.

All routines are exact; they require coordinates below
``geometry.INT64_SAFE_COORD`` in magnitude so that no intermediate overflows.
Callers check ``PointSet.int64_safe`` and fall back to pure Python otherwise.
"""

from __future__ import annotations

from math import gcd

import numpy as np

_BIG = np.int64(2**62)
_WALK_BUDGET = 4_000_000
_HASH_MUL = np.uint64(0x9E3779B97F4A7C15)


def canonical_lines(px, py, qx, qy):
    """Canonical (a, b, c) arrays for the lines through p[i] and q[i]."""
    a = qy - py
    b = px - qx
    g = np.gcd(a, b)
    a = a // g
    b = b // g
    flip = (a < 0) | ((a == 0) & (b < 0))
    a = np.where(flip, -a, a)
    b = np.where(flip, -b, b)
    c = -(a * px + b * py)
    return a, b, c


def _ceil_div(p, q):
    return -np.floor_divide(-p, q)


def _restrict(lo, hi, base, step, low, high):
    """Intersect [lo, hi] with {t : low <= base + t*step <= high}, in place."""
    pos = step > 0
    neg = step < 0
    zero = ~(pos | neg)
    if pos.any():
        s = step[pos]
        lo[pos] = np.maximum(lo[pos], _ceil_div(low - base[pos], s))
        hi[pos] = np.minimum(hi[pos], np.floor_divide(high - base[pos], s))
    if neg.any():
        s = step[neg]
        lo[neg] = np.maximum(lo[neg], _ceil_div(high - base[neg], s))
        hi[neg] = np.minimum(hi[neg], np.floor_divide(low - base[neg], s))
    if zero.any():
        outside = zero & ((base < low) | (base > high))
        hi[outside] = lo[outside] - 1


def count_on_lines(a, b, c, ax, ay, xs, ys) -> np.ndarray:
    """Exact number of points (xs, ys) lying on each line (a, b, c).

    (ax[i], ay[i]) must be an integer point of line i.  Canonical lines that
    pass through a lattice point have gcd(a, b) == 1, so their lattice points
    are exactly (ax + t*b, ay - t*a).  Lines with few lattice points inside
    the bounding box of the point set are counted by walking those points and
    looking them up in a sorted key table; the rest by a direct scan.
    """
    m = len(a)
    n = len(xs)
    counts = np.zeros(m, dtype=np.int64)
    if m == 0 or n == 0:
        return counts
    xmin, xmax = xs.min(), xs.max()
    ymin, ymax = ys.min(), ys.max()
    lo = np.full(m, -_BIG, dtype=np.int64)
    hi = np.full(m, _BIG, dtype=np.int64)
    _restrict(lo, hi, ax, b, xmin, xmax)
    _restrict(lo, hi, ay, -a, ymin, ymax)
    length = np.maximum(hi - lo + 1, 0)

    scan = np.flatnonzero(length > n)
    if scan.size:
        chunk = max(1, _WALK_BUDGET // n)
        for s in range(0, scan.size, chunk):
            idx = scan[s : s + chunk]
            vals = a[idx, None] * xs + b[idx, None] * ys + c[idx, None]
            counts[idx] = np.count_nonzero(vals == 0, axis=1)

    walk = np.flatnonzero((length > 0) & (length <= n))
    if walk.size:
        height = ymax - ymin + 1
        table = np.sort((xs - xmin) * height + (ys - ymin))
        cum = np.cumsum(length[walk])
        start = 0
        while start < walk.size:
            base_total = cum[start - 1] if start else 0
            stop = int(np.searchsorted(cum, base_total + _WALK_BUDGET, side="right"))
            stop = max(stop, start + 1)
            idx = walk[start:stop]
            lens = length[idx]
            owner = np.repeat(np.arange(idx.size), lens)
            offs = np.cumsum(lens) - lens
            t = lo[idx][owner] + (np.arange(owner.size) - offs[owner])
            lx = ax[idx][owner] + t * b[idx][owner]
            ly = ay[idx][owner] - t * a[idx][owner]
            keys = (lx - xmin) * height + (ly - ymin)
            pos = np.searchsorted(table, keys)
            pos[pos == n] = n - 1
            hit = table[pos] == keys
            counts[idx] = np.bincount(owner[hit], minlength=idx.size)
            start = stop
    return counts


def _groups_sorted(s: np.ndarray, members: np.ndarray, need: int):
    """Yield arrays of member indices whose slope values coincide, size >= need."""
    order = np.argsort(s, kind="stable")
    sv = s[order]
    cut = np.flatnonzero(sv[1:] != sv[:-1]) + 1
    starts = np.concatenate(([0], cut))
    ends = np.concatenate((cut, [sv.size]))
    big = np.flatnonzero(ends - starts >= need)
    for g in big.tolist():
        yield members[order[starts[g] : ends[g]]]


def _heavy_slope_groups(s: np.ndarray, need: int):
    m = s.size
    if m < need:
        return
    if need <= 3 or m < 256:
        yield from _groups_sorted(s, np.arange(m), need)
        return
    # Equal rationals give bit-identical correctly rounded quotients, so a
    # hash of the float bits never separates a true group.
    bits = np.ascontiguousarray(s).view(np.uint64)
    shift = np.uint64(64 - max(8, int(m - 1).bit_length()))
    h = ((bits * _HASH_MUL) >> shift).astype(np.intp)
    load = np.bincount(h)
    cand = np.flatnonzero(load[h] >= need)
    if cand.size:
        yield from _groups_sorted(s[cand], cand, need)


def _split_exact(dx: np.ndarray, dy: np.ndarray, members: np.ndarray) -> list[np.ndarray]:
    """Split a float-slope group into groups of exactly parallel directions."""
    ref = 0
    cross = dx * dy[ref] - dy * dx[ref]
    if not cross.any():
        return [members]
    buckets: dict[tuple[int, int], list[int]] = {}
    for k, (u, v) in enumerate(zip(dx.tolist(), dy.tolist())):
        g = gcd(u, v)
        buckets.setdefault((u // g, v // g), []).append(k)
    return [members[np.array(ks)] for ks in buckets.values()]


def rich_line_witnesses(xs: np.ndarray, ys: np.ndarray, lam: int) -> list[tuple[int, int, int]]:
    """All lines with >= lam points, as (i, j, count) with i, j original indices.

    Anchor-point direction grouping: points are swept in (x, y) order and each
    anchor groups the later points by direction.  The first point of a line
    sees every other point of it, so the largest count reported for a line is
    exact.  Lines may be reported several times (once per qualifying anchor).
    """
    n = len(xs)
    if lam < 2 or n < lam:
        return []
    order = np.lexsort((ys, xs))
    X = xs[order]
    Y = ys[order]
    need = lam - 1
    out = []
    with np.errstate(divide="ignore"):
        for i in range(n - need):
            dx = X[i + 1 :] - X[i]
            dy = Y[i + 1 :] - Y[i]
            s = dy / dx
            for grp in _heavy_slope_groups(s, need):
                for exact in _split_exact(dx[grp], dy[grp], grp):
                    if exact.size >= need:
                        out.append(
                            (int(order[i]), int(order[i + 1 + exact[0]]), 1 + int(exact.size))
                        )
    return out
