import csv
import io

import pytest

from richlines.bench import CSV_HEADER, ConfigError, parse_config, records_to_csv, run_bench


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_empty_suite_is_header_only():
    assert records_to_csv(run_bench(parse_config(""))) == ",".join(CSV_HEADER) + "\n"
    assert run_bench(parse_config("task = rich\nalgos = rand\n")) == []


def test_brute_oracle_marks_records_correct():
    cfg = parse_config("""
        # rich lines at n = 200
        task = rich
        instance = planted_rich
        n = 200
        param = 20, 60
        algos = rand, det, brute
        seeds = 0..1
        oracle = brute
    """)
    recs = run_bench(cfg)
    assert len(recs) == 12
    assert all(r.correct is True and r.wall_ns > 0 for r in recs)
    table = rows(records_to_csv(recs))
    assert table[0] == list(CSV_HEADER)
    assert table[1][-1] == "true"


def test_sqrt_nlogn_param_and_other_tasks():
    cfg = parse_config("n = 300\nparam = sqrt_nlogn\nalgos = rand\n")
    (rec,) = run_bench(cfg)
    assert rec.param == 42 and rec.correct is None
    fit = run_bench(parse_config("task = fit\nn = 150\nalgos = rand, det\noracle = det\n"))
    assert [r.correct for r in fit] == [True, True]
    kern = run_bench(parse_config("task = kernel\ninstance = genpos\nn = 30\nparam = 3\nalgos = det\noracle = solve\n"))
    assert kern[0].correct is True


def test_config_errors():
    for bad in ("task = sort", "n = ten", "bogus = 1", "n = 1\nn = 2", "just words", "jobs = 0",
                "task = kernel\ninstance = grid"):
        with pytest.raises(ConfigError):
            parse_config(bad)


def test_records_reproducible_apart_from_timing():
    cfg = parse_config("n = 120\nparam = 8\nalgos = rand, det\nseeds = 3, 4\noracle = det\n")
    a, b = run_bench(cfg), run_bench(cfg)
    strip = lambda recs: [(r.algo, r.n, r.param, r.seed, r.out_size, r.correct) for r in recs]
    assert strip(a) == strip(b)


def test_parallel_jobs_give_same_records():
    base = "n = 100\nparam = 6\nalgos = rand\nseeds = 0..3\noracle = det\n"
    seq = run_bench(parse_config(base))
    par = run_bench(parse_config(base + "jobs = 2\n"))
    strip = lambda recs: [(r.algo, r.n, r.param, r.seed, r.out_size, r.correct) for r in recs]
    assert strip(seq) == strip(par)
