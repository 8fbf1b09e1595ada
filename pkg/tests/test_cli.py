import subprocess
import sys

import pytest

from richlines import gen_grid, parse_lines, parse_points, write_points
from richlines.cli import main


def run(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "richlines", *map(str, args)],
        input=stdin, capture_output=True, text=True,
    )


@pytest.fixture
def grid_file(tmp_path):
    p = tmp_path / "grid.txt"
    p.write_text(write_points(gen_grid(3, 3)))
    return p


def test_rich_lines_det(grid_file, capsys):
    assert main(["rich-lines", "--lambda", "3", "--algo", "det", "--input", str(grid_file)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1] == "# n=9 lambda=3 found=8 aborted=false"
    assert all(len(line.split()) == 4 and line.split()[3] == "3" for line in out[:-1])


def test_exact_fit(grid_file, capsys):
    assert main(["exact-fit", "--input", str(grid_file)]) == 0
    assert capsys.readouterr().out == "0 1 -2 3\n"


def test_solve(grid_file, capsys):
    assert main(["solve", "--k", "3", "--input", str(grid_file)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("YES\n") and len(parse_lines(out[4:])) == 3
    assert main(["solve", "--k", "2", "--input", str(grid_file)]) == 0
    assert capsys.readouterr().out == "NO\n"


def test_kernelize_writes_files(tmp_path, capsys):
    pts = tmp_path / "cover.txt"
    assert main(["gen", "cover", "--k", "16", "--per-line", "40", "--seed", "3", "--output", str(pts)]) == 0
    truth = (tmp_path / "cover.txt.truth").read_text()
    assert truth.startswith("YES\n")
    kern, lines = tmp_path / "k.txt", tmp_path / "h.txt"
    code = main(["kernelize", "--k", "16", "--input", str(pts), "--out-kernel", str(kern),
                 "--out-lines", str(lines), "--seed", "1"])
    assert code == 0
    summary = capsys.readouterr().out
    assert summary.startswith("# verdict=REDUCED kernel_size=")
    forced = parse_lines(lines.read_text())
    assert set(forced) <= set(parse_lines(truth.split("\n", 2)[2]))
    assert len(parse_points(kern.read_text())) <= 256


def test_gen_variants(tmp_path):
    for args in (["grid", "--rows", "2", "--cols", "3"], ["genpos", "--n", "20"], ["rich", "--n", "50", "--lambda", "10"]):
        out = tmp_path / f"{args[0]}.txt"
        assert main(["gen", *args, "--output", str(out)]) == 0
        assert len(parse_points(out.read_text())) in (6, 20, 50)
    assert (tmp_path / "genpos.txt.truth").read_text().startswith("NO\n")


def test_exit_codes(tmp_path):
    assert run("rich-lines").returncode == 1
    assert run("frobnicate").returncode == 1
    assert run("rich-lines", "--lambda", "2", stdin="2147483648 0\n").returncode == 1
    assert run("rich-lines", "--lambda", "2", stdin="1 2\n1 2\n").returncode == 1
    assert run("rich-lines", "--lambda", "2", "--input", str(tmp_path / "missing")).returncode == 1
    assert run("rich-lines", "--lambda", "5", stdin="0 0\n1 1\n2 5\n").returncode == 2
    assert run("kernelize", "--k", "0", stdin="0 0\n").returncode == 2
    assert run("solve", "--k", "9", stdin="0 0\n").returncode == 2
    ok = run("rich-lines", "--lambda", "2", "--algo", "brute", stdin="0 0\n1 1\n2 5\n")
    assert ok.returncode == 0 and ok.stdout.endswith("found=3 aborted=false\n")


def test_seed_must_be_u64():
    assert run("exact-fit", "--seed", "-1", stdin="0 0\n1 1\n").returncode == 1
