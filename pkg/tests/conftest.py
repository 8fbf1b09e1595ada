import functools

import numpy as np
import pytest

from richlines import PointSet, gen_grid, gen_planted_rich
from richlines.sampling import Rng


def random_box(n, side, gen):
    """n distinct points from a small box, so collinear runs are common."""
    side = max(side, int(np.ceil(np.sqrt(n))) + 1)
    cells = gen.choice(side * side, size=n, replace=False)
    return PointSet((int(c % side), int(c // side)) for c in cells)


def _lambda_for(n, gen):
    # Mostly small thresholds (where the answer is nonempty), sometimes any.
    if gen.random() < 0.7:
        return int(gen.integers(2, min(n, 8) + 1))
    return int(gen.integers(2, n + 1))


@functools.lru_cache(maxsize=None)
def fuzz_corpus(count=500, max_n=300, seed=2024):
    """Deterministic list of (kind, PointSet, lambda) over mixed families."""
    gen = np.random.default_rng(seed)
    out = []
    for i in range(count):
        kind = ("grid", "planted", "box", "sparse")[i % 4]
        if kind == "grid":
            rows = int(gen.integers(1, 18))
            cols = int(gen.integers(1, max(2, min(18, max_n // rows)) + 1))
            S = gen_grid(rows, cols)
            if len(S) < 2:
                S = gen_grid(2, 2)
        elif kind == "planted":
            n = int(gen.integers(3, max_n + 1))
            lam = int(gen.integers(2, n + 1))
            # a 101x101 box cannot hold many points without collinear triples
            bounds = [50, 1000, 2**20] if n <= 60 else [1000, 2**20]
            S = gen_planted_rich(n, lam, coord_bound=int(gen.choice(bounds)), rng=Rng(seed, (i,)))
        elif kind == "box":
            n = int(gen.integers(2, max_n + 1))
            S = random_box(n, int(gen.integers(3, 40)), gen)
        else:
            n = int(gen.integers(2, 120))
            S = random_box(n, 10_000, gen)
        out.append((kind, S, _lambda_for(len(S), gen)))
    return tuple(out)


@pytest.fixture
def grid3():
    return gen_grid(3, 3)
