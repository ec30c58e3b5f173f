import json
import subprocess
import sys

import pytest

from secondsol import chg, cli, series
from secondsol.exactcore import LaurentLogExpansion, poly_from_json, rational_from_json
from secondsol.reference import P_TABLES


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_chg_table_single(capsys):
    code, out, _ = run(capsys, "chg-table", "--N", "2", "--n", "1", "--format", "text")
    assert code == 0 and out == "x^2 - 5x + 2\n"


def test_chg_table_all_text_format(capsys):
    code, out, _ = run(capsys, "chg-table", "--all")
    assert code == 0
    blocks = out.rstrip("\n").split("\n\n")
    assert len(blocks) == 5
    for N, block in enumerate(blocks):
        lines = block.split("\n")
        assert lines[0] == f"n  N={N}"
        assert lines[1:] == [f"{n}  {text}" for n, text in enumerate(P_TABLES[N])]


def test_chg_table_all_json_round_trip(capsys):
    code, out, _ = run(capsys, "chg-table", "--all", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 35
    for row in rows:
        assert poly_from_json(row["P"]) == chg.p_poly(row["N"], row["n"])
        assert row["text"] == P_TABLES[row["N"]][row["n"]]


def test_dalembert_harmonic_json(capsys):
    code, out, _ = run(capsys, "dalembert", "--example", "harmonic", "--upto", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert rational_from_json(data["second"][-1]) == rational_from_json({"num": "77", "den": "60"})
    assert data["second_is_solution"] and data["y_form_holds"]


def test_dalembert_ex4_text(capsys):
    code, out, _ = run(capsys, "dalembert", "--example", "ex4", "--upto", "6")
    assert code == 0
    assert out.splitlines()[8].split() == ["6", "64", "40128"]


def test_dalembert_custom_coefficients(capsys):
    code, out, _ = run(capsys, "dalembert", "--coeffs", "a=2,1;b=-3,-2;c=1,1", "--seeds", "1,1",
                       "--upto", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["second"][-1] == {"num": "77", "den": "60"}


def test_dalembert_double_root_with_root(capsys):
    code, out, _ = run(capsys, "dalembert", "--example", "double-root", "--root", "1/2", "--upto", "3",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["second"][3] == {"num": "1", "den": "4"}


def test_dalembert_vanishing_first_solution_exits_1(capsys):
    code, _, err = run(capsys, "dalembert", "--coeffs", "a=1;b=-1;c=-1", "--seeds", "0,1")
    assert code == 1 and "vanishes" in err


def test_pq_text_and_json(capsys):
    code, out, _ = run(capsys, "pq", "--n", "4")
    assert code == 0
    assert out.splitlines()[0] == "P_4 (5 terms) = b0 b1 b2 b3 + b0 b1 g(2,3) + b0 g(1,2) b3 + g(0,1) b2 b3 + g(0,1) g(2,3)"
    code, out, _ = run(capsys, "pq", "--n", "4", "--format", "json")
    data = json.loads(out)
    assert data["Q"] == [["b1", "b2", "b3"], ["b1", "g(2,3)"], ["g(1,2)", "b3"]]
    assert data["P_terms"] == 5 and data["Q_terms"] == 3


def test_chg_verify(capsys):
    code, out, _ = run(capsys, "chg-verify", "--N", "3", "--n", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["all_passed"]
    assert all(data["results"][0]["checks"].values())


def test_bezout_json(capsys):
    code, out, _ = run(capsys, "bezout", "--N", "2", "--n", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["identity_holds"] and data["closed_form_matches"]
    assert rational_from_json(data["c"]) == 6
    assert (data["degree_s"], data["degree_t"]) == (0, 1)


def test_bezout_N0_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["bezout", "--N", "0", "--n", "1"])
    assert info.value.code == 2


def test_series_compare_text(capsys):
    code, out, _ = run(capsys, "series-compare", "--N", "3", "--n", "2")
    assert code == 0
    assert "[pole]" in out and "[log]" in out and out.rstrip().endswith("equal")


def test_series_compare_json_round_trip(capsys):
    code, out, _ = run(capsys, "series-compare", "--N", "0", "--n", "1", "--order", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["equal"]
    assert data["psi_dl"] == series.psi_dl(0, 3, 1).to_json()


def test_series_compare_failure_exits_1(capsys, monkeypatch):
    def broken(p, M, n=None):
        p = chg._params(p, n)
        return series.compare_expansions(p, M, series.psi_pm(p, M) + LaurentLogExpansion(M, log={0: 1}),
                                         series.psi_dl(p, M))

    monkeypatch.setattr(series, "compare", broken)
    code, out, err = run(capsys, "series-compare", "--N", "1", "--n", "1")
    assert code == 1 and "MISMATCH" in out and "verification failed" in err


@pytest.mark.parametrize("argv", [["bogus"], ["chg-table", "--N"], ["chg-table", "--N", "1"],
                                  ["pq"], ["chg-table", "--N", "-1", "--n", "0"], ["dalembert"],
                                  ["dalembert", "--example", "nope"], ["chg-table", "--N", "1", "--n", "1", "--wat"]])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(argv)
    assert info.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "series-compare", "--N", "2", "--n", "2", "--format", "json")[1] for _ in range(2)}
    assert len(outs) == 1


def test_module_entry_point_selftest():
    proc = subprocess.run([sys.executable, "-m", "secondsol", "selftest"], capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert proc.stdout.count("PASS") == 10 and "FAIL" not in proc.stdout
