import json

import pytest

from meshperm import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_worked_example(capsys):
    code, out, _ = run(capsys, "count", "23154", "123|0,0;1,2;2,1;3,1")
    assert code == 0 and out.strip() == "2"


def test_count_classical(capsys):
    code, out, _ = run(capsys, "count", "14325", "123|")
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(capsys, "count", "12", "123|")
    assert code == 0 and out.strip() == "0"


def test_count_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "count", "122", "123|")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "count", "123", "123;0,0")
    assert code == 2 and "error:" in err


def test_table_polynomials(capsys):
    code, out, _ = run(capsys, "table", "A33", "3")
    assert code == 0 and out.strip() == "x + y + 4"
    code, out, _ = run(capsys, "table", "S19", "2")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "table", "A17", "4")
    assert code == 0 and out.strip() == "x^2 + y^2 + 6x + 6y + 10"


def test_table_unknown_pair(capsys):
    code, _, err = run(capsys, "table", "Z9", "3")
    assert code == 2 and "unknown" in err


def test_table_json_payload(capsys, tmp_path):
    out_path = tmp_path / "t.json"
    code, out, _ = run(
        capsys, "table", "A33", "3", "--format", "json", "--out", str(out_path)
    )
    assert code == 0
    obj = json.loads(out_path.read_text())
    assert obj["counts"] == [[4, 1], [1, 0]]


def test_table_csv_payload(capsys):
    code, out, _ = run(capsys, "table", "A33", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ["k,l,count", "0,0,4", "0,1,1", "1,0,1"]


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--pairs", "all", "--n", "4")
    assert code == 0
    assert "verify: ok (58 pair reports)" in out


def test_verify_conjecture_report(capsys):
    code, out, _ = run(capsys, "verify", "--pairs", "S21", "--n", "6")
    assert code == 0
    assert "conjecture: holds at n<=6" not in out  # bracketed form below
    assert "[holds at n<=6]" in out


def test_verify_never_both_line(capsys):
    code, out, _ = run(capsys, "verify", "--pairs", "S9", "--n", "4")
    assert code == 0
    assert "never_both=ok" in out


def test_verify_strict_flag(capsys):
    # the conjectured pairs hold experimentally, so strict mode still exits 0
    code, out, _ = run(capsys, "verify", "--pairs", "S21,S22", "--n", "5", "--strict")
    assert code == 0
    assert out.count("[holds at n<=5]") == 2


def test_workers_must_be_positive(capsys):
    code, _, err = run(capsys, "verify", "--pairs", "S19", "--n", "3", "--workers", "0")
    assert code == 2 and "workers" in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--pairs", "S19,S20", "--n", "4", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["n_max"] == 4
    assert [r["pair"] for r in obj["pairs"]] == ["S19", "S20"]
    assert obj["frames"] == [{"frame": "S19-S20", "pairs": ["S19", "S20"], "equal": True}]


def test_verify_unknown_pair(capsys):
    code, _, err = run(capsys, "verify", "--pairs", "S99", "--n", "3")
    assert code == 2 and "unknown pair id" in err


def test_crosscheck(capsys):
    code, out, _ = run(capsys, "crosscheck", "--n", "4")
    assert code == 0
    assert "crosscheck: ok" in out
    assert "FAIL" not in out


def test_bijection_pass_and_fail(capsys):
    code, out, _ = run(capsys, "bijection", "S9", "--n", "4")
    assert code == 0
    assert json.loads(out)["pass"] is True
    code, out, _ = run(capsys, "bijection", "S21", "--n", "4")
    assert code == 1
    obj = json.loads(out)
    assert obj["pass"] is False and obj["stats"]["image_size"] == 18


def test_bijection_symmetry_map_needs_pair(capsys):
    code, _, err = run(capsys, "bijection", "complement", "--n", "4")
    assert code == 2
    code, out, _ = run(capsys, "bijection", "complement", "--pair", "S1", "--n", "4")
    assert code == 0


def test_catalog_validate(capsys):
    code, out, _ = run(capsys, "catalog", "validate")
    assert code == 0
    assert "catalog validate: ok" in out


def test_export_files(capsys, tmp_path):
    code, out, _ = run(
        capsys, "export", "--pairs", "S19,A17", "--n", "3",
        "--format", "csv", "--out", str(tmp_path),
    )
    assert code == 0
    assert (tmp_path / "S19_n3.csv").exists()
    assert (tmp_path / "A17_n3.csv").read_text().startswith("k,l,count\n")


def test_capacity_env(capsys, monkeypatch):
    monkeypatch.setenv("MESHPERM_NMAX", "4")
    code, _, err = run(capsys, "verify", "--pairs", "S19", "--n", "6")
    assert code == 2 and "0..4" in err


def test_workers_flag(capsys):
    code, out, _ = run(capsys, "table", "A33", "4", "--workers", "2")
    assert code == 0 and out.strip() == "x^2 + y^2 + 6x + 6y + 10"
