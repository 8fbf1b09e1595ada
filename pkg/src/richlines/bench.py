"""Benchmark harness: seeded instances, timed algorithm bodies, CSV records.

Config format: one ``key = value`` per line, ``#`` comments.  Keys:

    task        rich | fit | kernel                     (default rich)
    instance    planted_rich | planted_cover | genpos | grid
                                                        (default planted_rich)
    n           comma list of point counts; empty means an empty suite
    param       comma list of lambda (rich) or k (kernel) values; the token
                sqrt_nlogn stands for ceil(sqrt(n ln n))    (ignored for fit)
    algos       comma list from rand, det, brute            (default rand,det)
    seeds       comma list, or an inclusive range "0..4"    (default 0)
    oracle      brute | det | solve | truth | none          (default none)
    coord_bound integer coordinate box for generators       (default 2**24)
    jobs        worker processes; 1 runs sequentially        (default 1)

For each (n, param, seed) one instance is generated from the seed and shared
by all algorithms.  Only the algorithm call is timed.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass
from math import ceil, log, sqrt

from .fitting import exact_fit
from .geometry import PreconditionError
from .kernel import Verdict, kernelize
from .oracles import gen_general_position, gen_grid, gen_planted_cover, gen_planted_rich, solve_cover
from .rich import rich_lines_brute, rich_lines_det, rich_lines_rand
from .sampling import Rng

CSV_HEADER = ("algo", "n", "param", "seed", "wall_ns", "out_size", "correct")

TASKS = ("rich", "fit", "kernel")
INSTANCES = ("planted_rich", "planted_cover", "genpos", "grid")
ALGOS = ("rand", "det", "brute")
ORACLES = ("brute", "det", "solve", "truth", "none")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class BenchConfig:
    task: str = "rich"
    instance: str = "planted_rich"
    n: tuple = ()
    param: tuple = ()
    algos: tuple = ("rand", "det")
    seeds: tuple = (0,)
    oracle: str = "none"
    coord_bound: int = 2**24
    jobs: int = 1


@dataclass(frozen=True)
class BenchRecord:
    algo: str
    n: int
    param: int
    seed: int
    wall_ns: int
    out_size: int
    correct: bool | None


def _ints(key, value) -> tuple:
    try:
        return tuple(int(v) for v in value.split(",") if v.strip())
    except ValueError:
        raise ConfigError(f"{key}: expected a comma list of integers, got {value!r}") from None


def _choice(key, value, allowed):
    if value not in allowed:
        raise ConfigError(f"{key}: expected one of {', '.join(allowed)}, got {value!r}")
    return value


def parse_config(text: str) -> BenchConfig:
    fields: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in fields:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        if key == "task":
            fields[key] = _choice(key, value, TASKS)
        elif key == "instance":
            fields[key] = _choice(key, value, INSTANCES)
        elif key == "oracle":
            fields[key] = _choice(key, value, ORACLES)
        elif key == "n":
            fields[key] = _ints(key, value)
        elif key == "param":
            toks = [v.strip() for v in value.split(",") if v.strip()]
            for t in toks:
                if t != "sqrt_nlogn":
                    _ints(key, t)
            fields[key] = tuple(t if t == "sqrt_nlogn" else int(t) for t in toks)
        elif key == "algos":
            fields[key] = tuple(_choice(key, v.strip(), ALGOS) for v in value.split(",") if v.strip())
        elif key == "seeds":
            if ".." in value:
                lo, hi = _ints(key, value.replace("..", ","))
                fields[key] = tuple(range(lo, hi + 1))
            else:
                fields[key] = _ints(key, value)
        elif key in ("coord_bound", "jobs"):
            vals = _ints(key, value)
            v = vals[0] if len(vals) == 1 else 0
            if v < 1:
                raise ConfigError(f"{key}: expected a positive integer, got {value!r}")
            fields[key] = v
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
    if fields.get("task") == "kernel":
        fields.setdefault("instance", "planted_cover")
        if fields["instance"] in ("planted_rich", "grid"):
            raise ConfigError(f"instance {fields['instance']!r} carries no cover truth for task=kernel")
    return BenchConfig(**fields)


def _resolve_param(p, n: int) -> int:
    return ceil(sqrt(n * log(n))) if p == "sqrt_nlogn" else int(p)


def _make_instance(cfg: BenchConfig, n: int, param: int, seed: int):
    """Returns (points, truth) where truth is a GroundTruth or None."""
    rng = Rng(seed).child(0)
    if cfg.instance == "grid":
        side = max(1, round(sqrt(n)))
        return gen_grid(side, max(1, n // side)), None
    if cfg.instance == "genpos":
        inst = gen_general_position(n, min(cfg.coord_bound, 2**30), rng, k=param if cfg.task == "kernel" else None)
        return inst.points, inst.ground_truth
    if cfg.instance == "planted_cover":
        k = param if cfg.task == "kernel" else max(1, n // 100)
        inst = gen_planted_cover(k, max(2, n // k), min(cfg.coord_bound, 2**30), rng)
        return inst.points, inst.ground_truth
    lam = min(param, n) if cfg.task == "rich" else max(2, n // 10)
    return gen_planted_rich(n, lam, min(cfg.coord_bound, 2**30), rng), None


def _run_algo(cfg: BenchConfig, algo: str, S, param: int, seed: int):
    rng = Rng(seed).child(1)
    if cfg.task == "rich":
        if algo == "rand":
            return rich_lines_rand(S, param, rng)
        return (rich_lines_det if algo == "det" else rich_lines_brute)(S, param)
    if cfg.task == "fit":
        return exact_fit(S, "det" if algo == "brute" else algo, rng)
    return kernelize(S, param, "det" if algo == "brute" else algo, rng)


def _size(cfg: BenchConfig, out) -> int:
    if cfg.task == "rich":
        return len(out)
    if cfg.task == "fit":
        return out.count
    return len(out.kernel)


def _oracle(cfg: BenchConfig, S, param: int, truth):
    if cfg.oracle == "none":
        return None
    if cfg.task == "rich":
        if cfg.oracle in ("brute", "det"):
            return (rich_lines_brute if cfg.oracle == "brute" else rich_lines_det)(S, param).lines
        return None
    if cfg.task == "fit":
        if cfg.oracle in ("brute", "det"):
            rep = (rich_lines_brute if cfg.oracle == "brute" else rich_lines_det)(S, 2)
            return max(cnt for _, cnt in rep.lines)
        return None
    if cfg.oracle == "solve":
        return solve_cover(S, param).yes
    if cfg.oracle == "truth" and truth is not None:
        return truth.yes
    return None


def _judge(cfg: BenchConfig, out, expected, param: int):
    if expected is None:
        return None
    if cfg.task == "rich":
        return out.lines == expected
    if cfg.task == "fit":
        return out.count == expected
    if out.verdict is Verdict.NO_INSTANCE:
        return expected is False
    if len(out.kernel) > param * param:
        return False
    if cfg.oracle == "solve":
        return solve_cover(out.kernel, out.k_prime, bounded=False).yes == expected
    # Truth oracle: a YES instance must stay reducible; a NO verdict is always sound.
    return True


def _instance_records(cfg: BenchConfig, n: int, p, seed: int) -> list[BenchRecord]:
    param = _resolve_param(p, n) if cfg.task != "fit" else 0
    if cfg.task == "rich" and not 2 <= param <= n:
        raise PreconditionError(f"lambda={param} outside [2, n={n}]")
    S, truth = _make_instance(cfg, n, param, seed)
    expected = _oracle(cfg, S, param, truth)
    out = []
    for algo in cfg.algos:
        t0 = time.perf_counter_ns()
        res = _run_algo(cfg, algo, S, param, seed)
        wall = max(1, time.perf_counter_ns() - t0)
        out.append(BenchRecord(algo, len(S), param, seed, wall, _size(cfg, res), _judge(cfg, res, expected, param)))
    return out


def _jobs_for(cfg: BenchConfig) -> list[tuple]:
    params = cfg.param if cfg.task != "fit" else (0,)
    return [(n, p, s) for n in cfg.n for p in params for s in cfg.seeds]


def run_bench(cfg: BenchConfig) -> list[BenchRecord]:
    jobs = _jobs_for(cfg)
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(_instance_records, [cfg] * len(jobs), *zip(*jobs)))
    else:
        chunks = [_instance_records(cfg, *job) for job in jobs]
    return [rec for chunk in chunks for rec in chunk]


def records_to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rec in records:
        row = list(astuple(rec))
        row[-1] = "" if rec.correct is None else str(rec.correct).lower()
        w.writerow(row)
    return buf.getvalue()
