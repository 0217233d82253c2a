import json

import pytest

from hesspave import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_roots_text(capsys):
    code, out, _ = run(capsys, "roots", "--family", "B", "--rank", "2")
    assert code == 0
    assert "4 positive roots, 2 rows" in out
    assert "vertical=True" in out
    assert "row 1" in out and "row 2" in out


def test_roots_json(capsys):
    code, out, _ = run(capsys, "roots", "--family", "D", "--rank", "4",
                       "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["count"] == 12 and obj["vertical"] is True
    assert len(obj["roots"]) == 12
    assert {r["row"] for r in obj["roots"]} == {1, 2, 3, 4}


def test_roots_long_root_shown(capsys):
    code, out, _ = run(capsys, "roots", "--family", "C", "--rank", "2")
    assert code == 0
    assert "long=2a1+a2" in out
    assert "Heisenberg" in out


def test_spaces_counts(capsys):
    code, out, _ = run(capsys, "spaces", "--family", "A", "--rank", "2")
    assert code == 0 and "5 Hessenberg spaces" in out
    code, out, _ = run(capsys, "spaces", "--family", "A", "--rank", "3",
                       "--list")
    assert code == 0 and "14 Hessenberg spaces" in out
    assert out.count("h=") == 14
    code, out, _ = run(capsys, "spaces", "--family", "B", "--rank", "2",
                       "--format", "json")
    assert json.loads(out)["count"] == 6


def test_spaces_resource_cap(capsys):
    code, _, err = run(capsys, "spaces", "--family", "B", "--rank", "9")
    assert code == 4
    assert "resource cap" in err


def test_pave_text(capsys):
    code, out, _ = run(capsys, "pave", "--family", "A", "--rank", "2",
                       "--nilpotent", "1,1,1", "--hess", "full")
    assert code == 0
    assert "poincare: 1 + 2x^2 + 2x^4 + x^6" in out
    assert "euler: 6" in out
    assert out.count("pi=[") == 6


def test_pave_peterson(capsys):
    code, out, _ = run(capsys, "pave", "--family", "A", "--rank", "3",
                       "--nilpotent", "4", "--hess", "peterson")
    assert code == 0
    assert "poincare: 1 + 3x^2 + 3x^4 + x^6" in out
    assert "euler: 8" in out


def test_pave_point(capsys):
    code, out, _ = run(capsys, "pave", "--family", "C", "--rank", "2",
                       "--regular-nilpotent", "--hess", "borel")
    assert code == 0
    assert "poincare: 1\n" in out


def test_pave_csv(capsys):
    code, out, _ = run(capsys, "pave", "--family", "B", "--rank", "2",
                       "--regular-nilpotent", "--hess", "full",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "window,length,nonempty,dim"
    assert len(lines) == 9
    assert lines[1].split(",")[0].count(" ") == 1  # space-separated window


def test_pave_json_roundtrip(capsys):
    argv = ("pave", "--family", "A", "--rank", "2", "--regular-nilpotent",
            "--hess", "h=2,3,3", "--format", "json")
    code, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code == code2 == 0
    assert out1 == out2  # deterministic
    obj = json.loads(out1)
    assert obj["h"] == "2,3,3"
    assert obj["poincare"] == [1, 0, 2, 0, 1]


def test_pave_oracle_method(capsys):
    code, out, _ = run(capsys, "pave", "--family", "D", "--rank", "3",
                       "--regular-nilpotent", "--hess", "peterson",
                       "--method", "oracle", "--trials", "3", "--seed", "5")
    assert code == 0
    assert "poincare: 1 + 3x^2 + 3x^4 + x^6" in out
    assert "euler: 8" in out


def test_pave_neg_hess(capsys):
    code, out, _ = run(capsys, "pave", "--family", "A", "--rank", "2",
                       "--regular-nilpotent", "--hess", "neg=-1,0;0,-1")
    assert code == 0
    assert "poincare: 1 + 2x^2 + x^4" in out


def test_config_errors(capsys):
    code, _, err = run(capsys, "pave", "--family", "A", "--rank", "2",
                       "--nilpotent", "2,2,1", "--hess", "full")
    assert code == 2
    assert "sum to 5, expected 3" in err
    code, _, err = run(capsys, "pave", "--family", "B", "--rank", "2",
                       "--nilpotent", "2,1", "--hess", "full")
    assert code == 2
    code, _, err = run(capsys, "pave", "--family", "A", "--rank", "2",
                       "--regular-nilpotent", "--nilpotent", "3",
                       "--hess", "full")
    assert code == 2 and "exactly one operator" in err
    code, _, err = run(capsys, "pave", "--family", "A", "--rank", "2",
                       "--regular-nilpotent")
    assert code == 2 and "--hess" in err
    code, _, err = run(capsys, "pave", "--family", "B", "--rank", "2",
                       "--regular-nilpotent", "--hess", "h=2,3,3")
    assert code == 2
    code, _, err = run(capsys, "verify", "--family", "A", "--rank", "2",
                       "--regular-nilpotent")
    assert code == 2


def test_bad_family_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["roots", "--family", "E", "--rank", "6"])
    assert err.value.code == 2


def test_pave_resource_cap(capsys):
    code, _, err = run(capsys, "pave", "--family", "B", "--rank", "11",
                       "--regular-nilpotent", "--hess", "borel")
    assert code == 4 and "resource cap" in err


def test_verify_all_hess(capsys):
    code, out, _ = run(capsys, "verify", "--family", "A", "--rank", "2",
                       "--nilpotent", "2,1", "--all-hess",
                       "--trials", "3", "--seed", "3")
    assert code == 0
    lines = [ln for ln in out.strip().split("\n")]
    assert len(lines) == 5
    assert all(ln.startswith("pass hess=h=") for ln in lines)
    assert "tableau" in lines[0]


def test_verify_single_space_no_tableau_path(capsys):
    code, out, _ = run(capsys, "verify", "--family", "D", "--rank", "3",
                       "--regular-nilpotent", "--hess", "peterson",
                       "--trials", "3")
    assert code == 0
    assert "paths: formula, oracle" in out
    assert "tableau" not in out


def test_verify_names_first_disagreement(capsys, monkeypatch):
    real = cli.cell_report

    def corrupted(spec, system, H, pi, method="formula", **kw):
        r = real(spec, system, H, pi, method, **kw)
        if method == "formula" and pi.window == (3, 2, 1) and r.nonempty:
            return type(r)(pi, True, r.dim - 1, r.formula)
        return r

    monkeypatch.setattr(cli, "cell_report", corrupted)
    code, out, _ = run(capsys, "verify", "--family", "A", "--rank", "2",
                       "--regular-nilpotent", "--hess", "full", "--trials", "3")
    assert code == 3
    assert "FAIL" in out and "pi=[3 2 1]" in out
