import json
import subprocess
import sys

import pytest

from hankeldet.cli import main
from support import WORKED_DEN, WORKED_NUM


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dets_worked_example(capsys):
    code, out, _ = run(capsys, "dets", "--num", WORKED_NUM, "--den", WORKED_DEN, "--n", "7", "--oracle")
    assert code == 0
    assert out.split() == ["0", "0", "-64", "-720", "-2096", "960", "14060"]


def test_dets_json(capsys):
    code, out, _ = run(capsys, "dets", "--num", WORKED_NUM, "--den", WORKED_DEN, "--n", "16", "--json")
    payload = json.loads(out)
    assert code == 0
    assert set(payload) == {"dets", "nonzero_indices", "kronecker_bound", "field"}
    assert payload["kronecker_bound"] == 13
    assert payload["nonzero_indices"] == list(range(3, 14))


def test_dets_gfp_matches_oracle(capsys):
    args = ["--num", WORKED_NUM, "--den", WORKED_DEN, "--n", "10", "--field", "gfp", "--modulus", "101"]
    code, fast, _ = run(capsys, "dets", *args)
    code2, slow, _ = run(capsys, "oracle-dets", *args)
    assert code == code2 == 0 and fast == slow
    assert fast.split()[2] == str(-64 % 101)


def test_dets_catalan_coeffs(capsys):
    code, out, _ = run(capsys, "dets", "--coeffs", "1,1,2,5,14,42,132,429,1430,4862,16796,58786,"
                                        "208012,742900,2674440", "--n", "8")
    assert code == 0 and out.split() == ["1"] * 8


def test_too_few_coefficients(capsys):
    code, _, err = run(capsys, "dets", "--coeffs", "1,2,3", "--n", "3")
    assert code == 3 and "2n-1 = 5" in err


def test_hfrac_check(capsys):
    code, out, _ = run(capsys, "hfrac", "--num", WORKED_NUM, "--den", WORKED_DEN, "--check")
    assert code == 0
    assert out.splitlines()[0].startswith("level 0: v=4 k=2")
    assert out.splitlines()[-1] == "matches through x^14"


def test_hfrac_json(capsys):
    code, out, _ = run(capsys, "hfrac", "--num", "x", "--den", "1-x-x^2", "--json")
    levels = json.loads(out)["levels"]
    assert code == 0 and levels[0]["k"] == 1


def test_signature(capsys):
    code, out, _ = run(capsys, "signature", "--power-sums-of", "x^3-x", "--n", "3", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["signature"] == 3
    assert payload["agreement"]["frobenius"] == 3


def test_signature_singular(capsys):
    code, _, err = run(capsys, "signature", "--num", WORKED_NUM, "--den", WORKED_DEN, "--n", "2")
    assert code == 3 and "singular" in err


@pytest.mark.parametrize("argv,expected", [
    (["roots", "--poly", "x^2-1"], "2"),
    (["roots", "--poly", "x^2+1"], "0"),
    (["roots", "--poly", "(x-1)*(x-2)*(x-3)*(x-4)*(x-5)"], "5"),
    (["roots", "--poly", "x^2-1", "--a", "0", "--b", "3/2"], "1"),
])
def test_roots(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


@pytest.mark.parametrize("argv,code", [
    (["roots", "--poly", "(x-1)^2"], 3),
    (["roots", "--poly", "x^2+"], 2),
    (["roots", "--poly", "x^2-1", "--a", "1", "--b", "2"], 3),
    (["roots", "--poly", "x^2-1", "--a", "1"], 2),
    (["dets", "--num", "1", "--den", "x", "--n", "3"], 3),
    (["dets", "--num", "1", "--n", "0"], 2),
    (["dets", "--num", "1", "--coeffs", "1", "--n", "1"], 2),
    (["dets", "--num", "1", "--n", "3", "--field", "gfp", "--modulus", "100"], 2),
    (["oracle-dets", "--num", "1", "--n", "65"], 2),
    (["bench", "--sizes", "8,a"], 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_bench_small(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "64,128", "--json")
    rows = json.loads(out)["rows"]
    assert code == 0 and [r["n"] for r in rows] == [64, 128]
    assert rows[1]["ratio"] > 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hankeldet", "roots", "--poly", "x^3-x+1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
