import json

from app.core.config import settings
from app.main import run


def test_verify_json(capsys):
    code = run(["verify", "--n", "3", "--p", "2", "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out)
    assert payload["h_table"] == {"5": 1, "6": 6}
    assert payload["witness"] == "Y0*Y1*Y2*Y3"
    assert payload["matrix"] == {"rows": 35, "cols": 40}
    assert all(check["status"] == "pass" for check in payload["checks"])


def test_verify_small_p_is_a_usage_error(monkeypatch, capsys):
    monkeypatch.setattr(settings, "ALLOW_SMALL_P", False)
    code = run(["verify", "--n", "4", "--p", "2"])
    assert code == 1
    assert "p must be ≥ n−1 (= 3)" in capsys.readouterr().err


def test_allow_small_p_setting_reaches_the_cli(monkeypatch, capsys):
    monkeypatch.setattr(settings, "ALLOW_SMALL_P", True)
    assert run(["verify", "--n", "4", "--p", "2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["exploratory"] is True
    assert payload["matrix"] == {"rows": 0, "cols": 0}


def test_allow_small_p_flag_overrides_the_setting(monkeypatch, capsys):
    monkeypatch.setattr(settings, "ALLOW_SMALL_P", False)
    assert run(["verify", "--n", "4", "--p", "2", "--allow-small-p", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["exploratory"] is True


def test_verify_composite_p(capsys):
    assert run(["verify", "--n", "3", "--p", "4"]) == 1
    assert "not prime" in capsys.readouterr().err


def test_missing_argument_exits_with_one(capsys):
    assert run(["verify", "--n", "3"]) == 1
    assert "--p" in capsys.readouterr().err


def test_verify_budget_exceeded(capsys):
    assert run(["verify", "--n", "3", "--p", "3", "--budget", "10"]) == 3
    assert "budget" in capsys.readouterr().err


def test_nonpositive_budget_is_rejected(capsys):
    assert run(["verify", "--n", "3", "--p", "2", "--budget", "0"]) == 1


def test_verify_text_to_file(tmp_path, capsys):
    out = tmp_path / "report.txt"
    assert run(["verify", "--n", "3", "--p", "2", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    text = out.read_text()
    assert "h^5(X, L^-1) = 1" in text
    assert "[pass] witness_not_in_image" in text


def test_verify_with_matrix_dump(tmp_path, capsys):
    path = tmp_path / "a.txt"
    assert run(["verify", "--n", "3", "--p", "2", "--dump-matrix", str(path), "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["corank"] == 1
    assert path.read_text().startswith("35 40 2\n")
    assert (tmp_path / "a.txt.rows").exists()


def test_sweep_csv(capsys):
    code = run(["sweep", "--n-min", "3", "--n-max", "4", "--p-max", "3", "--format", "csv"])
    lines = capsys.readouterr().out.splitlines()
    assert code == 0
    assert lines[0] == "n,p,rows,cols,rank,corank,kernel,witness_in_image,checks_passed"
    assert lines[1] == "3,2,35,40,34,1,6,False,True"
    assert [line.split(",")[:2] for line in lines[1:]] == [["3", "2"], ["3", "3"], ["4", "3"]]


def test_sweep_inverted_range_is_empty(capsys):
    assert run(["sweep", "--n-min", "5", "--n-max", "3", "--p-max", "5", "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "n,p,rows,cols,rank,corank,kernel,witness_in_image,checks_passed"
    ]


def test_sweep_with_a_budget_failure_exits_with_two(capsys):
    code = run(["sweep", "--n-min", "3", "--n-max", "3", "--p-max", "3", "--budget", "50", "--format", "csv"])
    lines = capsys.readouterr().out.splitlines()
    assert code == 2
    assert lines[1].startswith("3,2,") and lines[1].endswith(",True")
    assert lines[2].startswith("3,3,") and lines[2].endswith(",False")


def test_cohomology_zero_table(capsys):
    assert run(["cohomology", "--n", "3", "--a", "-2", "--b", "8", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["bundle"] == "O(-2,0,8)"
    assert set(payload["dims"].values()) == {0}


def test_cohomology_on_pn(capsys):
    assert run(["cohomology", "--n", "3", "--a", "-5", "--space", "pn", "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines() == ["j,dim", "0,0", "1,0", "2,0", "3,4"]


def test_cohomology_indeterminate(capsys):
    assert run(["cohomology", "--n", "3", "--a", "-5", "--b", "5"]) == 0
    out = capsys.readouterr().out
    assert "h^2 = indeterminate" in out


def test_dump_command(tmp_path, capsys):
    path = tmp_path / "m.txt"
    assert run(["dump", "--n", "3", "--p", "2", "--out", str(path), "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["rows"] == 35 and payload["cols"] == 40
    assert len(payload["files"]) == 3
    assert path.exists()


def test_unknown_command(capsys):
    assert run(["frobnicate"]) == 1
