"""CLI subcommands: outputs, formats, and exit codes."""

import json
import pathlib
import subprocess
import sys

import pytest

from knormal import cli, counting, oracle

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_text(capsys):
    code, out, _ = run(capsys, "count", "--q", "25", "--n", "3", "--k", "2")
    assert code == 0
    assert out == "72\n"


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--q", "25", "--n", "3", "--k", "2", "--format", "csv")
    assert code == 0
    assert out == "q,n,k,count\n25,3,2,72\n"


def test_count_json_huge_value_roundtrips(capsys):
    code, out, _ = run(capsys, "count", "--q", "16", "--n", "16", "--k", "0", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == "17293822569102704640"
    assert int(payload["count"]) == counting.count_normal(16, 16)
    assert int(payload["count"]) > 2**63


def test_count_rejects_non_prime_power(capsys):
    code, out, err = run(capsys, "count", "--q", "12", "--n", "3", "--k", "0")
    assert code == 2
    assert out == ""
    assert "prime power" in err


def test_count_rejects_k_out_of_range(capsys):
    code, _, err = run(capsys, "count", "--q", "2", "--n", "5", "--k", "9")
    assert code == 2
    assert "k" in err


def test_distribution_text(capsys):
    code, out, _ = run(capsys, "distribution", "--q", "2", "--n", "3")
    assert code == 0
    assert out == "N_0 = 3\nN_1 = 3\nN_2 = 1\nN_3 = 1\nsum = 8 = 2^3\n"


def test_distribution_json(capsys):
    code, out, _ = run(capsys, "distribution", "--q", "2", "--n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["counts"] == ["8", "4", "2", "1", "1"]
    assert payload["sum_check"] is True


def test_distribution_csv_parses_back(capsys):
    code, out, _ = run(capsys, "distribution", "--q", "27", "--n", "9", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,count"
    parsed = [int(line.split(",")[1]) for line in lines[1:]]
    assert tuple(parsed) == counting.distribution(27, 9).counts


@pytest.mark.parametrize(
    "golden,argv",
    [
        ("table_q2.csv", ["table", "--q", "2", "--n-min", "1", "--n-max", "20"]),
        ("table_q3.csv", ["table", "--q", "3", "--n-min", "1", "--n-max", "16"]),
        ("table_q4.csv", ["table", "--q", "4", "--n-min", "1", "--n-max", "14"]),
        ("table_q25.csv", ["table", "--q", "25", "--n-min", "1", "--n-max", "7", "--k-max", "3"]),
        ("table_q27.csv", ["table", "--q", "27", "--n-min", "9", "--n-max", "12", "--k-max", "3"]),
        ("table_q16.csv", ["table", "--q", "16", "--n-min", "14", "--n-max", "16", "--k-max", "3"]),
    ],
)
def test_table_matches_golden(capsys, golden, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_table_blank_cells_only_above_n(capsys):
    code, out, _ = run(capsys, "table", "--q", "25", "--n-min", "1", "--n-max", "3",
                       "--k-max", "3")
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    for row in rows:
        n = int(row[0])
        for k, cell in enumerate(row[1:]):
            assert (cell == "") == (k > n)


def test_table_text_format(capsys):
    code, out, _ = run(capsys, "table", "--q", "2", "--n-min", "1", "--n-max", "4",
                       "--format", "text")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["n", "N_0"]
    assert lines[-1].split() == ["4", "8"]


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--q", "25", "--n-min", "1", "--n-max", "7",
                       "--k-max", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["q"] == 25
    row = payload["rows"][4]  # n = 5
    assert row["n"] == 5
    assert row["counts"] == ["9375000", "375000", "15000", "600"]
    short = payload["rows"][0]
    assert short["counts"] == ["24", "1"]  # k > n cells are absent


def test_table_rejects_bad_range(capsys):
    code, _, err = run(capsys, "table", "--q", "2", "--n-min", "5", "--n-max", "2")
    assert code == 2
    assert "range" in err


def test_verify_all_passes(capsys):
    code, out, _ = run(capsys, "verify", "--q", "2", "--n", "5", "--oracle", "all")
    assert code == 0
    assert out.count("PASS") == 4
    assert "FAIL" not in out
    assert "4 checks" in out


def test_verify_brute_only(capsys):
    code, out, _ = run(capsys, "verify", "--q", "3", "--n", "4", "--oracle", "brute")
    assert code == 0
    assert out.count("PASS") == 1


def test_verify_closed_forms_json(capsys):
    code, out, _ = run(capsys, "verify", "--q", "25", "--n", "3",
                       "--oracle", "closed-forms", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert [c["name"] for c in payload["checks"]] == ["closed-forms"]


def test_verify_modulus_trials(capsys):
    code, out, _ = run(capsys, "verify", "--q", "2", "--n", "6", "--oracle", "brute",
                       "--modulus-trials", "2")
    assert code == 0
    assert "formula-vs-brute[modulus 0]" in out
    assert "formula-vs-brute[modulus 1]" in out


def test_verify_refuses_oversized_brute(capsys):
    code, _, err = run(capsys, "verify", "--q", "2", "--n", "40", "--oracle", "brute")
    assert code == 2
    assert "guard" in err


def test_verify_reports_mismatch(capsys, monkeypatch):
    # force a wrong ground truth to exercise the failure contract
    wrong = counting.Distribution(q=2, n=3, counts=(4, 2, 1, 1))
    monkeypatch.setattr(
        oracle, "brute_force_distribution", lambda q, n, **kw: wrong
    )
    code, out, _ = run(capsys, "verify", "--q", "2", "--n", "3", "--oracle", "brute")
    assert code == 1
    assert "FAIL formula-vs-brute" in out


def test_factors_text(capsys):
    code, out, _ = run(capsys, "factors", "--q", "27", "--n", "11")
    assert code == 0
    assert "n0 = 11" in out
    assert "d = 5" in out
    assert "v_1 = 1" in out
    assert "v_5 = 2" in out
    assert "omega = 3" in out


def test_factors_json(capsys):
    code, out, _ = run(capsys, "factors", "--q", "2", "--n", "12", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["p"] == 2 and payload["s"] == 2 and payload["n0"] == 3
    assert payload["v"] == {"1": 1, "2": 1}
    assert payload["omega"] == 2


def test_factors_csv(capsys):
    code, out, _ = run(capsys, "factors", "--q", "2", "--n", "5", "--format", "csv")
    assert code == 0
    lines = dict(line.split(",") for line in out.strip().splitlines()[1:])
    assert lines["d"] == "4"
    assert lines["v_1"] == "1"
    assert lines["v_4"] == "1"
    assert lines["omega"] == "2"


def test_missing_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2


def test_module_entry_point_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "knormal.cli", "count", "--q", "25", "--n", "3", "--k", "2"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout == "72\n"
