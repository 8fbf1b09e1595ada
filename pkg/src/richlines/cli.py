"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as rio
from .bench import ConfigError, parse_config, records_to_csv, run_bench
from .fitting import exact_fit
from .geometry import GeometryError, PreconditionError
from .kernel import kernelize
from .oracles import (
    GenerationError,
    gen_general_position,
    gen_grid,
    gen_planted_cover,
    gen_planted_rich,
    solve_cover,
)
from .rich import rich_lines
from .sampling import DEFAULT_SEED, Rng

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return v


def _emit(text: str, path):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _read_input(args):
    if args.input is None or args.input == "-":
        return rio.parse_points(sys.stdin.read())
    try:
        return rio.read_points(args.input)
    except OSError as e:
        raise UsageError(f"cannot read {args.input}: {e.strerror}") from None


def _truth_text(inst) -> str:
    gt = inst.ground_truth
    if gt.yes:
        return f"YES\n# k={inst.k} witness={len(gt.witness)}\n" + rio.write_lines(gt.witness)
    return f"NO\n# k={inst.k} {gt.reason}\n"


def cmd_gen(args):
    rng = Rng(args.seed)
    kind = args.kind
    if kind == "grid":
        _emit(rio.write_points(gen_grid(args.rows, args.cols)), args.output)
        return
    if kind == "rich":
        S = gen_planted_rich(args.n, args.lam, args.coord_bound, rng)
        _emit(rio.write_points(S), args.output)
        return
    if kind == "cover":
        per = args.per_line if len(args.per_line) > 1 else args.per_line[0]
        inst = gen_planted_cover(args.k, per, args.coord_bound, rng)
    else:
        inst = gen_general_position(args.n, args.coord_bound, rng, args.k)
    _emit(rio.write_points(inst.points), args.output)
    if args.output is not None:
        Path(str(args.output) + ".truth").write_text(_truth_text(inst), encoding="utf-8")


def cmd_rich(args):
    S = _read_input(args)
    rep = rich_lines(S, args.lam, args.algo, Rng(args.seed))
    body = "".join(f"{a} {b} {c} {cnt}\n" for (a, b, c), cnt in rep.lines)
    summary = f"# n={rep.n} lambda={rep.lam} found={len(rep)} aborted={str(rep.aborted).lower()}\n"
    _emit(body + summary, args.output)


def cmd_fit(args):
    S = _read_input(args)
    fit = exact_fit(S, args.algo, Rng(args.seed))
    a, b, c = fit.line
    _emit(f"{a} {b} {c} {fit.count}\n", args.output)


def cmd_kernelize(args):
    S = _read_input(args)
    res = kernelize(S, args.k, args.algo, Rng(args.seed))
    if args.out_kernel:
        Path(args.out_kernel).write_text(rio.write_points(res.kernel), encoding="utf-8")
    if args.out_lines:
        Path(args.out_lines).write_text(rio.write_lines(res.forced_lines), encoding="utf-8")
    _emit(
        f"# verdict={res.verdict.value} kernel_size={len(res.kernel)} "
        f"k_prime={res.k_prime} forced={len(res.forced_lines)}\n",
        args.output,
    )


def cmd_solve(args):
    S = _read_input(args)
    ans = solve_cover(S, args.k)
    _emit(("YES\n" + rio.write_lines(ans.lines)) if ans.yes else "NO\n", args.output)


def cmd_bench(args):
    try:
        text = Path(args.config).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {args.config}: {e.strerror}") from None
    cfg = parse_config(text)
    _emit(records_to_csv(run_bench(cfg)), args.output)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_u64, default=DEFAULT_SEED, help="u64 seed (default 0)")
    common.add_argument("--input", help="points file ('-' or omitted: stdin)")
    common.add_argument("--output", help="output file (omitted: stdout)")

    p = _Parser(prog="richlines", description="Rich lines, exact fitting and Line Cover kernels.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="generate an instance")
    gsub = g.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    gg = gsub.add_parser("grid", parents=[common])
    gg.add_argument("--rows", type=int, required=True)
    gg.add_argument("--cols", type=int, required=True)
    gc = gsub.add_parser("cover", parents=[common])
    gc.add_argument("--k", type=int, required=True)
    gc.add_argument("--per-line", type=int, nargs="+", required=True)
    gc.add_argument("--coord-bound", type=int, default=2**20)
    gp = gsub.add_parser("genpos", parents=[common])
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--k", type=int, default=None, help="parameter for the truth file")
    gp.add_argument("--coord-bound", type=int, default=2**20)
    gr = gsub.add_parser("rich", parents=[common])
    gr.add_argument("--n", type=int, required=True)
    gr.add_argument("--lambda", dest="lam", type=int, required=True)
    gr.add_argument("--coord-bound", type=int, default=2**24)
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("rich-lines", parents=[common], help="report lambda-rich lines")
    r.add_argument("--lambda", dest="lam", type=int, required=True)
    r.add_argument("--algo", choices=("rand", "det", "brute"), default="rand")
    r.set_defaults(func=cmd_rich)

    f = sub.add_parser("exact-fit", parents=[common], help="line through the most points")
    f.add_argument("--algo", choices=("rand", "det"), default="det")
    f.set_defaults(func=cmd_fit)

    k = sub.add_parser("kernelize", parents=[common], help="Line Cover kernel")
    k.add_argument("--k", type=int, required=True)
    k.add_argument("--algo", choices=("rand", "det"), default="rand")
    k.add_argument("--out-kernel")
    k.add_argument("--out-lines")
    k.set_defaults(func=cmd_kernelize)

    s = sub.add_parser("solve", parents=[common], help="exact Line Cover for small inputs")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bench", parents=[common], help="run a benchmark suite, emit CSV")
    b.add_argument("--config", required=True)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (rio.ParseError, ConfigError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, GeometryError, GenerationError) as e:
        print(f"precondition violated: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
