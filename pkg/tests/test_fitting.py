import pytest

from richlines import PointSet, PreconditionError, Rng, exact_fit, gen_grid, gen_planted_rich, rich_lines_brute

from conftest import fuzz_corpus


def test_collinear():
    S = PointSet((t, 3 * t - 1) for t in range(25))
    for mode in ("det", "rand"):
        fit = exact_fit(S, mode, Rng(0))
        assert fit.count == 25 and fit.line == (3, -1, -1)


def test_grid_tie_break_is_lexicographic():
    fit = exact_fit(gen_grid(3, 3), "det")
    assert fit.count == 3
    assert fit.line == min(rich_lines_brute(gen_grid(3, 3), 3).line_set)


def test_planted():
    S = gen_planted_rich(1000, 300, rng=Rng(4))
    for mode in ("det", "rand"):
        fit = exact_fit(S, mode, Rng(1))
        assert fit.count == 300


def test_two_points_and_errors():
    assert exact_fit(PointSet([(0, 0), (1, 2)])).count == 2
    with pytest.raises(PreconditionError):
        exact_fit(PointSet([(0, 0)]))
    with pytest.raises(ValueError):
        exact_fit(gen_grid(2, 2), "fast")


def test_det_matches_brute_maximum_on_corpus_sample():
    for _, S, _ in fuzz_corpus()[:150]:
        best = max(c for _, c in rich_lines_brute(S, 2).lines)
        assert exact_fit(S, "det").count == best


def test_rand_count_is_exact():
    for _, S, _ in fuzz_corpus()[:40]:
        fit = exact_fit(S, "rand", Rng(7))
        assert sum(1 for p in S if fit.line(p) == 0) == fit.count


def test_richness_is_monotone_in_lambda():
    S = gen_grid(5, 8)
    nonempty = [len(rich_lines_brute(S, lam)) > 0 for lam in range(2, len(S) + 1)]
    assert nonempty == sorted(nonempty, reverse=True)
