"""Smoke tests for the _bezsub extension and the bezsub CLI.

Runs standalone (python smoke_test.py) or under pytest. The CLI checks are
skipped unless BEZSUB_CLI points at the built binary.
"""

import json
import os
import subprocess
import sys
import tempfile

import _bezsub as bz

CLI = os.environ.get("BEZSUB_CLI")
FIXTURES = os.environ.get("BEZSUB_FIXTURE_DIR")


def test_poly_basics():
    p = bz.parse_poly("x^2 - 3*x + 2")
    assert str(p) == "x^2 - 3*x + 2"
    assert p.degree == 2
    assert p.coeffs() == ["2", "-3", "1"]
    assert p("1") == "0"
    assert p("1/2") == "3/4"
    q = bz.parse_poly("(x-1)*(x-2)")
    assert p == q
    assert str(p - q) == "0"
    assert bz.from_roots("1", ["1", "2"]) == p


def test_parse_errors_are_value_errors():
    for bad in ["x +", "1/(x+1)", "y"]:
        try:
            bz.parse_poly(bad)
        except ValueError:
            pass
        else:
            raise AssertionError(f"expected ValueError for {bad!r}")


def test_subresultant_fixture():
    system = [bz.parse_poly("x^2 - 3*x + 2"), bz.parse_poly("x - 1")]
    for formula in ("bezout", "hybrid", "nonhom"):
        assert str(bz.subresultant(system, [1], formula)) == "-x + 1"
        assert str(bz.subresultant(system, [2], formula)) == "0"
    assert bz.subresultant_matrix(system, [1], "hybrid") == [["-1", "1"], ["x", "-1"]]
    assert bz.subresultant_matrix(system, [2], "hybrid") == [["-1", "1"], ["-2", "2"]]
    assert bz.subresultant_matrix(system, [2], "nonhom") == [["-1", "1"], ["1", "-1"]]
    assert bz.scale_exponent(system, [1], "bezout") == -1
    assert bz.scale_exponent(system, [1], "hybrid") == 0


def test_cross_formula_and_oracle():
    lc, roots = "2", ["-1", "0", "3"]
    tail = [bz.parse_poly("x^2 + x - 1"), bz.parse_poly("3*x - 2")]
    system = [bz.from_roots(lc, roots)] + tail
    for delta in bz.enumerate_deltas([3, 2, 1]):
        results = {f: str(bz.subresultant(system, delta, f)) for f in ("bezout", "hybrid", "nonhom")}
        oracle = str(bz.oracle_subresultant(lc, roots, tail, delta))
        assert len(set(results.values())) == 1, (delta, results)
        assert oracle == results["bezout"], (delta, oracle, results)


def test_pairwise_matrices():
    a = bz.parse_poly("x^2 - 3*x + 2")
    b = bz.parse_poly("x - 1")
    assert bz.bezout_matrix(a, b) == [["-1", "1"], ["1", "-1"]]
    assert bz.hybrid_bezout_matrix(a, b) == [["-1", "1"], ["-2", "2"]]
    assert bz.nonhom_bezout_matrix(a, b) == [["-1", "1"], ["1", "-1"]]


def test_delta_validation():
    system = [bz.parse_poly("x^2 - 3*x + 2"), bz.parse_poly("x - 1")]
    for bad in ([0], [3], [1, 1]):
        try:
            bz.subresultant(system, bad, "hybrid")
        except ValueError:
            pass
        else:
            raise AssertionError(f"expected ValueError for delta={bad}")


def _run_cli(*args):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_cli_exit_codes():
    if not CLI:
        return
    fixture = os.path.join(FIXTURES, "worked_system.json")

    code, out, _ = _run_cli("compute", "--system", fixture, "--delta", "1", "--formula", "hybrid")
    assert (code, out) == (0, "-x + 1\n")

    code, out, _ = _run_cli("compute", "--system", fixture, "--delta", "2", "--formula", "nonhom")
    assert (code, out) == (0, "0\n")

    # usage/validation errors -> 2
    assert _run_cli("compute", "--system", fixture, "--delta", "0", "--formula", "hybrid")[0] == 2
    assert _run_cli("compute", "--system", fixture, "--delta", "3", "--formula", "hybrid")[0] == 2
    assert _run_cli("compute", "--system", fixture, "--delta", "1,1", "--formula", "hybrid")[0] == 2
    assert _run_cli("compute", "--system", fixture, "--delta", "1", "--formula", "nope")[0] == 2
    code, _, err = _run_cli("check", "--system", fixture, "--delta", "1", "--roots", "1,1")
    assert code == 2 and "distinct" in err

    # file/parse errors -> 1
    assert _run_cli("compute", "--system", "/no/such.json", "--delta", "1", "--formula", "hybrid")[0] == 1

    # check: pass and corrupted negative control
    code, out, _ = _run_cli("check", "--system", fixture, "--all-deltas", "--roots", "1,2")
    assert code == 0 and "delta=1 PASS" in out and "delta=2 PASS" in out
    code, out, _ = _run_cli("check", "--system", fixture, "--all-deltas", "--corrupt")
    assert code == 1 and "FAIL" in out

    # inline polynomials instead of a system file
    code, out, _ = _run_cli("compute", "--poly", "x^2 - 3*x + 2", "--poly", "x - 1",
                            "--delta", "1", "--formula", "hybrid")
    assert (code, out) == (0, "-x + 1\n")
    assert _run_cli("compute", "--poly", "x +", "--poly", "1",
                    "--delta", "1", "--formula", "hybrid")[0] == 1
    assert _run_cli("compute", "--system", fixture, "--poly", "x",
                    "--delta", "1", "--formula", "hybrid")[0] == 2
    assert _run_cli("compute", "--delta", "1", "--formula", "hybrid")[0] == 2


def test_cli_compute_matches_module():
    if not CLI:
        return
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "system.json")
        polys = ["3*x^4 - x^3 + 2*x - 5", "x^3 + 4*x^2 - 1", "2*x - 7"]
        with open(path, "w") as fh:
            json.dump({"polys": polys}, fh)
        system = [bz.parse_poly(p) for p in polys]
        for delta in ([1, 1], [2, 1], [4, 0]):
            expect = str(bz.subresultant(system, delta, "nonhom"))
            code, out, _ = _run_cli("compute", "--system", path, "--delta",
                                    ",".join(map(str, delta)), "--formula", "nonhom")
            assert code == 0 and out.strip() == expect


def test_cli_bench_csv():
    if not CLI:
        return
    with tempfile.TemporaryDirectory() as tmp:
        out_path = os.path.join(tmp, "bench.csv")
        code, out, _ = _run_cli("bench", "--degrees", "5,4,4", "--deltas", "2,2",
                                "--trials", "2", "--seed", "7", "--out", out_path)
        assert code == 0 and "wrote 6 records" in out
        with open(out_path) as fh:
            lines = fh.read().splitlines()
        assert lines[0] == "formula,degrees,delta,trial,t_matrix_ns,t_det_ns,t_total_ns"
        assert len(lines) == 7
        assert lines[1].startswith("bezout,5-4-4,2-2,1,")


def main():
    tests = [(name, fn) for name, fn in sorted(globals().items())
             if name.startswith("test_") and callable(fn)]
    for name, fn in tests:
        fn()
        print(f"{name}: ok")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
