import itertools

import numpy as np
import pytest

from richlines import (
    PointSet,
    PreconditionError,
    Rng,
    covered_subset,
    gen_general_position,
    gen_grid,
    gen_planted_cover,
    gen_planted_rich,
    line_through,
    rich_lines_brute,
    rich_lines_det,
    solve_cover,
)
from richlines.oracles import _intersection

from conftest import random_box


def exhaustive_cover(S, k):
    if len(S) <= k:
        return True
    lines = sorted({line_through(p, q) for p, q in itertools.combinations(S, 2)})
    for r in range(0, k + 1):
        for combo in itertools.combinations(lines, r):
            _, rest = covered_subset(combo, S)
            # leftover points can each take one of the unused lines
            if len(rest) <= k - r:
                return True
    return False


def test_solve_examples():
    g = gen_grid(3, 3)
    ans = solve_cover(g, 3)
    assert ans.yes and len(ans.lines) <= 3
    assert len(covered_subset(ans.lines, g)[1]) == 0
    assert not solve_cover(g, 2).yes
    S = gen_general_position(7, rng=Rng(0)).points
    assert not solve_cover(S, 3).yes


def test_solve_trivial_cases():
    S = PointSet([(0, 0), (5, 0), (1, 9)])
    ans = solve_cover(S, 3)
    assert ans.yes and len(covered_subset(ans.lines, S)[1]) == 0
    assert not solve_cover(S, 0).yes
    assert solve_cover(PointSet([]), 0).yes


def test_solve_bounds():
    with pytest.raises(PreconditionError):
        solve_cover(gen_grid(8, 8), 2)
    with pytest.raises(PreconditionError):
        solve_cover(gen_grid(2, 2), 6)


def test_solve_agrees_with_exhaustive_search():
    gen = np.random.default_rng(3)
    for _ in range(150):
        S = random_box(int(gen.integers(1, 13)), int(gen.integers(3, 7)), gen)
        k = int(gen.integers(0, 4))
        ans = solve_cover(S, k)
        assert ans.yes == exhaustive_cover(S, k)
        if ans.yes:
            assert len(ans.lines) <= k and len(covered_subset(ans.lines, S)[1]) == 0


def test_grid_examples():
    assert len(gen_grid(3, 3)) == 9
    row = gen_grid(1, 5)
    assert len(row) == 5 and len({y for _, y in row}) == 1
    assert len(rich_lines_brute(gen_grid(2, 2), 2)) == 6
    with pytest.raises(PreconditionError):
        gen_grid(0, 3)


def test_planted_cover_large():
    inst = gen_planted_cover(16, 200, rng=Rng(0))
    assert 3000 < len(inst.points) <= 3200
    assert inst.ground_truth.yes and inst.verify()
    lines = inst.ground_truth.witness
    assert len(set(lines)) == 16
    # no three planted lines through a common point
    crossings = [_intersection(a, b) for a, b in itertools.combinations(lines, 2)]
    crossings = [c for c in crossings if c is not None]
    assert len(crossings) == len(set(crossings))


def test_planted_cover_single_line_and_counts():
    inst = gen_planted_cover(1, 10, rng=Rng(1))
    assert len(inst.points) == 10
    assert len(rich_lines_brute(inst.points, 10)) == 1
    inst = gen_planted_cover(3, [4, 5, 6], coord_bound=1000, rng=Rng(2))
    assert inst.verify() and len(inst.points) <= 15
    assert gen_planted_cover(4, 9, rng=Rng(9)) == gen_planted_cover(4, 9, rng=Rng(9))


def test_general_position_512():
    inst = gen_general_position(512, rng=Rng(4))
    assert len(inst.points) == 512
    assert len(rich_lines_brute(inst.points, 3)) == 0
    assert not inst.ground_truth.yes


def test_general_position_small_and_truth():
    assert len(gen_general_position(1, rng=Rng(0)).points) == 1
    inst = gen_general_position(2 * 16 * 16, rng=Rng(5), k=16)
    assert not inst.ground_truth.yes
    inst = gen_general_position(9, rng=Rng(6), k=5)
    assert inst.ground_truth.yes and inst.verify()


def test_planted_rich():
    S = gen_planted_rich(1000, 300, rng=Rng(7))
    rep = rich_lines_brute(S, 300)
    assert [c for _, c in rep.lines] == [300]
    # filler in general position: no other line reaches 3 points
    assert len(rich_lines_brute(S, 3)) == 1
    S = gen_planted_rich(12, 12, rng=Rng(0))
    assert len(rich_lines_brute(S, 12)) == 1
    S = gen_planted_rich(10, 2, rng=Rng(0))
    assert len(rich_lines_brute(S, 2)) == 45
    with pytest.raises(PreconditionError):
        gen_planted_rich(5, 6)


def test_planted_rich_large_filler_avoids_planted_line():
    S = gen_planted_rich(6000, 100, rng=Rng(8))
    assert len(S) == 6000
    assert [c for _, c in rich_lines_det(S, 50).lines] == [100]
