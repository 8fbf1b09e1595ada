"""Seeded randomness and the two sampling primitives used by the algorithms.

``Rng`` wraps numpy's PCG64 bit generator seeded through a ``SeedSequence``.
Child generators are derived from the root seed plus an integer path, so
nested calls are reproducible no matter how many draws a sibling made.
"""

from __future__ import annotations

import numpy as np

from .geometry import PointSet, PreconditionError

DEFAULT_SEED = 0
_U64 = 2**64


class Rng:
    """Single-owner deterministic generator; see ``child`` for splitting."""

    def __init__(self, seed: int = DEFAULT_SEED, path: tuple[int, ...] = ()):
        seed = int(seed)
        if not 0 <= seed < _U64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self.path = tuple(int(k) for k in path)
        seq = np.random.SeedSequence(entropy=seed, spawn_key=self.path)
        self.generator = np.random.Generator(np.random.PCG64(seq))

    def child(self, *keys: int) -> "Rng":
        return Rng(self.seed, self.path + tuple(keys))

    def integers(self, low, high=None, size=None):
        return self.generator.integers(low, high, size=size)

    def __repr__(self) -> str:
        return f"Rng(seed={self.seed}, path={self.path})"


def as_rng(rng) -> Rng:
    if rng is None:
        return Rng(DEFAULT_SEED)
    if isinstance(rng, Rng):
        return rng
    return Rng(int(rng))


def pair_indices(n: int, x: int, rng: Rng) -> tuple[np.ndarray, np.ndarray]:
    """Index arrays for ``x`` independent uniform 2-subsets of range(n)."""
    if n < 2:
        raise PreconditionError(f"need at least 2 points to sample pairs, got {n}")
    if x < 0:
        raise PreconditionError(f"pair count must be nonnegative, got {x}")
    gen = rng.generator
    i = gen.integers(0, n, size=x)
    j = gen.integers(0, n, size=x)
    clash = np.flatnonzero(i == j)
    while clash.size:
        i[clash] = gen.integers(0, n, size=clash.size)
        j[clash] = gen.integers(0, n, size=clash.size)
        clash = clash[i[clash] == j[clash]]
    return i, j


def sample_pairs(S: PointSet, x: int, rng: Rng) -> list:
    if len(S) < 2:
        raise PreconditionError(f"need |S| >= 2 to sample pairs, got {len(S)}")
    if x < 1:
        raise PreconditionError(f"x must be positive, got {x}")
    i, j = pair_indices(len(S), x, rng)
    return [(S[a], S[b]) for a, b in zip(i.tolist(), j.tolist())]


def subset_indices(n: int, m: int, rng: Rng) -> np.ndarray:
    """First ``m`` slots of a partial Fisher-Yates shuffle of range(n)."""
    if not 0 <= m <= n:
        raise PreconditionError(f"cannot sample {m} of {n} items without replacement")
    if m == 0:
        return np.empty(0, dtype=np.int64)
    perm = list(range(n))
    offsets = np.arange(m, dtype=np.int64)
    swaps = (offsets + rng.generator.integers(0, n - offsets)).tolist()
    for k, s in enumerate(swaps):
        perm[k], perm[s] = perm[s], perm[k]
    return np.array(perm[:m], dtype=np.int64)


def sample_without_replacement(S: PointSet, m: int, rng: Rng) -> PointSet:
    if m < 1:
        raise PreconditionError(f"m must be positive, got {m}")
    if m > len(S):
        raise PreconditionError(f"cannot sample {m} points from a set of {len(S)}")
    return S.subset(subset_indices(len(S), m, rng).tolist())
