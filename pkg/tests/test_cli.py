import json

from zinbiel import catalog
from zinbiel.algebra import Algebra
from zinbiel.cli import main

REPORT_KEYS = {"command", "inputs", "results", "mismatches", "errors", "grades", "budget_exhausted",
               "timing_seconds", "exit_code"}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "[[a,b],c]")
    assert code == 0 and out.strip() == "1*[a,[b,c]] + 1*[a,[c,b]]"
    code, _, err = run(capsys, "normalize", "[a,[b")
    assert code == 2 and "offset 5" in err


def test_alpha_beta_null_filiform(capsys):
    code, out, _ = run(capsys, "alpha-beta", "NF:7", "--json")
    report = json.loads(out)
    assert code == 0 and set(report) == REPORT_KEYS
    assert report["results"][0]["alpha"] == report["results"][0]["beta"] == 4


def test_alpha_beta_example_text(capsys):
    code, out, _ = run(capsys, "alpha-beta", "example-3-1", "--groebner", "on", "--enumerate-ideals")
    assert code == 0
    assert "alpha = 4" in out and "beta  = 3" in out
    assert "span{e2, e4, e5-e6}" in out


def test_malformed_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 2,\n "products": [}')
    code, _, err = run(capsys, "alpha-beta", str(path))
    assert code == 2 and "line 2 column 15" in err


def test_non_zinbiel_input(tmp_path, capsys):
    path = tmp_path / "nz.json"
    path.write_text(json.dumps({"dim": 1, "products": [{"i": 1, "j": 1, "coeffs": {"1": "1"}}]}))
    code, _, err = run(capsys, "center", str(path))
    assert code == 2 and "[[e1,e1],e1]" in err


def test_unknown_catalog_id(capsys):
    code, _, err = run(capsys, "series", "Z9_9")
    assert code == 2 and "Z9_9" in err


def test_verify_tables_empty_filter(capsys):
    code, out, _ = run(capsys, "verify-tables", "--scope", "dim5", "--filter", "^nothing$", "--json")
    report = json.loads(out)
    assert code == 0 and report["results"] == [] and report["mismatches"] == []


def test_verify_tables_reports_mismatches(capsys):
    code, out, _ = run(capsys, "verify-tables", "--scope", "dim<=4", "--filter", "^Z3_3$", "--json")
    report = json.loads(out)
    assert code == 1
    assert [r["param"] for r in report["results"]] == ["0", "1", "2", "-1", "1/2"]
    assert len(report["mismatches"]) == 4
    assert report["grades"] == {"groebner": 5}


def test_verify_tables_match(capsys):
    code, out, _ = run(capsys, "verify-tables", "--scope", "dim<=4", "--filter", "^Z4_(1|8)$")
    assert code == 0 and "0 mismatches" in out


def test_series(capsys):
    code, out, _ = run(capsys, "series", "Z5_61", "--json")
    row = json.loads(out)["results"][0]
    assert code == 0 and row["nilpotency_index"] == 5 and row["supersolvable"] is True


def test_catalog_export_round_trip(tmp_path, capsys):
    path = tmp_path / "z48.json"
    code, _, _ = run(capsys, "catalog", "export", "Z4_8:a=1/2", "-o", str(path))
    assert code == 0
    assert Algebra.loads(path.read_text()).constants == catalog.get("Z4_8", a="1/2").constants
    assert json.loads(path.read_text()) == catalog.get("Z4_8", a="1/2").to_json()
    code, out, _ = run(capsys, "alpha-beta", str(path))
    assert code == 0 and "2|2" in out


def test_catalog_list_and_show(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--json")
    assert code == 0 and len(json.loads(out)["results"]) == 103
    code, out, _ = run(capsys, "catalog", "show", "Z5_53")
    assert code == 0 and "a != -1" in out


def test_check_commands(capsys):
    code, out, _ = run(capsys, "check", "thm2.1", "--scope", "dim<=4", "--filter", "^Z4_(2|12)$")
    assert code == 0 and "2 verified" in out
    code, out, _ = run(capsys, "check", "lemma1.1", "--scope", "dim<=4", "--filter", "^Z4_1$", "--seed", "3")
    assert code == 0 and "1 verified" in out


def test_groebner_command(tmp_path, capsys):
    path = tmp_path / "sys.json"
    path.write_text(json.dumps({"variables": ["x", "y"], "polynomials": ["x^2 - 4", "x*y - 2"]}))
    code, out, _ = run(capsys, "groebner", str(path), "--json")
    row = json.loads(out)["results"][0]
    assert code == 0 and not row["infeasible"] and row["rational_point"] == {"x": "2", "y": "1"}
    path.write_text(json.dumps({"variables": ["a", "b", "c"],
                                "polynomials": ["a^2 - b*c", "b^2 - a*c + 1", "c^2 - a*b - 2"]}))
    code, _, _ = run(capsys, "groebner", str(path), "--budget-pairs", "1")
    assert code == 3


def test_budget_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("ZINBIEL_BUDGET_SECS", "not-a-number")
    code, _, err = run(capsys, "alpha-beta", "Z4_1")
    assert code == 2 and "ZINBIEL_BUDGET_SECS" in err
