#!/usr/bin/env python3
"""Black box tests of the fgbetti command line tool.

Usage: run_cli_tests.py <path-to-fgbetti-binary>
"""

import pathlib
import subprocess
import sys
import tempfile

SQUARE = "poset rn 2\nv u 0 0\nv v 0 0\ne a u v 0 1\ne b u v 1 0\n"

SQUARE_BETTI = (
    "betti0\n0 0\n0 0\n"
    "betti1\n0 1\n1 0\n"
    "betti2\n1 1\n"
    "betti0_h1\n1 1\n"
    "matrix\n1 1 -1\n2 1 1\n1 2 -1\n2 2 1\n"
)

SQUARE_MINPRES = (
    "betti0\n0 0\n0 0\n"
    "betti1\n0 1\n1 0\n"
    "matrix\n1 1 -1\n2 1 1\n1 2 -1\n2 2 1\n"
)

SQUARE_ORACLE_F3 = (
    "field 3\n"
    "betti0\n0 0\n0 0\n"
    "betti1\n0 1\n1 0\n"
    "betti2\n1 1\n"
    "betti0_h1\n1 1\n"
    "matrix\n"
)

MULTI = "poset rn 2\nv u 0 2 ; 2 0\nv w 0 0\ne a u w 1 2 ; 3 0\n"

INVALID = "poset rn 2\nv u 1 1\nv v 0 0\ne a u v 0 0\n"

checks = 0


def run(binary, args, stdin=None):
    return subprocess.run(
        [binary] + args, input=stdin, capture_output=True, text=True, timeout=120
    )


def expect(cond, what, proc=None):
    global checks
    checks += 1
    if cond:
        return
    print(f"FAIL: {what}")
    if proc is not None:
        print(f"  exit code: {proc.returncode}")
        print(f"  stdout: {proc.stdout!r}")
        print(f"  stderr: {proc.stderr!r}")
    sys.exit(1)


def main():
    if len(sys.argv) != 2:
        print("usage: run_cli_tests.py <binary>")
        return 2
    binary = sys.argv[1]
    tmp = pathlib.Path(tempfile.mkdtemp(prefix="fgbetti_cli_"))
    square = tmp / "square.graph"
    square.write_text(SQUARE)

    p = run(binary, ["betti2d", str(square)])
    expect(p.returncode == 0 and p.stdout == SQUARE_BETTI, "betti2d golden output", p)

    p = run(binary, ["betti2d", "-"], stdin=SQUARE)
    expect(p.returncode == 0 and p.stdout == SQUARE_BETTI, "betti2d reads standard input", p)

    p = run(binary, ["betti2d", str(square), "--backend", "naive"])
    expect(p.returncode == 0 and p.stdout == SQUARE_BETTI, "naive backend agrees", p)

    p = run(binary, ["minpres", str(square)])
    expect(p.returncode == 0 and p.stdout == SQUARE_MINPRES, "minpres golden output", p)

    out_file = tmp / "pres.txt"
    p = run(binary, ["minpres", str(square), "-o", str(out_file)])
    expect(p.returncode == 0 and out_file.read_text() == SQUARE_MINPRES, "minpres -o writes file", p)

    p = run(binary, ["oracle", str(square), "--field", "3"])
    expect(p.returncode == 0 and p.stdout == SQUARE_ORACLE_F3, "oracle golden output", p)

    p = run(binary, ["verify", str(square)])
    expect(
        p.returncode == 0
        and "ok: presentation matches component counts at 4 grid points" in p.stdout
        and "ok: betti tables match the koszul oracle over F2" in p.stdout,
        "verify passes on a valid graph",
        p,
    )

    reduced = tmp / "reduced.graph"
    p = run(binary, ["reduce", str(square), "-o", str(reduced)])
    expect(p.returncode == 0 and reduced.read_text().startswith("poset rn 2\n"),
           "reduce writes a graph", p)
    p = run(binary, ["betti2d", str(reduced)])
    expect(p.returncode == 0 and p.stdout == SQUARE_BETTI, "reduce output reparses", p)

    multi = tmp / "multi.graph"
    multi.write_text(MULTI)
    expanded = tmp / "expanded.graph"
    p = run(binary, ["onecrit", str(multi), "-o", str(expanded)])
    expect(p.returncode == 0, "onecrit succeeds", p)
    text = expanded.read_text()
    expect("v u@0 0 2\n" in text and "v u@1 2 0\n" in text and "# from u@0 u" in text,
           "onecrit expands the two-birth vertex", p)
    p = run(binary, ["verify", str(expanded)])
    expect(p.returncode == 0, "expanded graph verifies", p)

    p = run(binary, ["bench", "--seed", "3", "--vertices", "64", "--edges", "128", "--op", "reduce"])
    expect(p.returncode == 0 and p.stdout.startswith("reduce seed=3 "), "bench runs", p)

    # failure modes
    p = run(binary, ["betti2d", str(tmp / "missing.graph")])
    expect(p.returncode == 4 and "error:" in p.stderr, "missing file is an i/o error", p)

    p = run(binary, ["betti2d", "-"], stdin="poset rn 2\nv u 0\n")
    expect(p.returncode == 1 and "line 2" in p.stderr, "parse errors exit 1 with a line number", p)

    p = run(binary, ["betti2d", "-"], stdin=INVALID)
    expect(p.returncode == 1 and "invalid input:" in p.stderr, "validation failures exit 1", p)

    p = run(binary, ["betti2d", "-"], stdin="poset rn 3\nv u 0 0 0\n")
    expect(p.returncode == 1, "sweep rejects three parameters", p)

    p = run(binary, [])
    expect(p.returncode == 2, "missing subcommand is a usage error", p)

    p = run(binary, ["frobnicate"])
    expect(p.returncode == 2, "unknown subcommand is a usage error", p)

    p = run(binary, ["oracle", str(square), "--field", "7"])
    expect(p.returncode == 2, "unsupported field is a usage error", p)

    p = run(binary, ["--help"])
    expect(p.returncode == 0 and "betti2d" in p.stdout, "--help lists subcommands", p)

    print(f"ok: {checks} cli checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
