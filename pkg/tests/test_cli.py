import csv
import io
import json

import pytest

from milnorfiber.cli import main
from milnorfiber.report import AnalysisReport


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_alexander_json(capsys):
    code, out = run(capsys, "alexander", "--catalog", "nine-cusp-sextic", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["alexander"]["certified"]
    assert data["alexander"]["delta1"] == "(t^2-t+1)^3"
    assert data["meta"]["arithmetic_mode"] == "off"


def test_classify_expression(capsys):
    code, out = run(capsys, "classify", "-f", "(xz-y^2)^3-x^2*y^4")
    assert code == 0
    assert "Free(2,3)" in out


def test_uncertified_exit_code(capsys):
    code, _ = run(capsys, "alexander", "--catalog", "hessian")
    assert code == 3
    code, out = run(capsys, "alexander", "--catalog", "hessian", "--allow-intervals")
    assert code == 0
    assert "(t+1)^[1..2]" in out


def test_input_errors(capsys):
    code, _ = run(capsys, "classify", "-f", "x^2+y")
    assert code == 2
    code, out = run(capsys, "classify", "-f", "x^2*y", "--format", "json")
    assert code == 2
    err = json.loads(out)["error"]
    assert err["type"] in {"NonIsolatedSingularities", "DegreeTooSmall"}
    code, _ = run(capsys, "classify", "--catalog", "nope")
    assert code == 2


def test_deterministic_output(capsys):
    argv = ["analyze", "--catalog", "zariski-sextic", "--format", "json", "--no-timing", "--witnesses"]
    _, a = run(capsys, *argv)
    _, b = run(capsys, *argv)
    assert a == b
    assert "elapsed_ms" not in json.loads(a)["meta"]


def test_json_roundtrip(capsys):
    _, out = run(capsys, "analyze", "--catalog", "nine-cusp-sextic", "--format", "json", "--no-timing")
    rep = AnalysisReport.from_json(json.loads(out))
    assert rep.dumps() == out


def test_csv_matches_json(capsys):
    _, js = run(capsys, "e2", "--catalog", "zariski-sextic", "--format", "json")
    _, cs = run(capsys, "e2", "--catalog", "zariski-sextic", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(cs)))
    assert [{k: int(v) for k, v in r.items()} for r in rows] == json.loads(js)["e2"]


def test_table_mentions_classification(capsys):
    code, out = run(capsys, "analyze", "--catalog", "e14-sextic", "--qmax", "8")
    assert code == 0
    assert "classification: Free(2,3)" in out and "Delta1: t^2-t+1" in out


def test_trust_mode_is_flagged(capsys):
    _, out = run(capsys, "e2", "--catalog", "zariski-sextic", "--modular", "trust", "--format", "json")
    assert json.loads(out)["meta"]["probabilistic"] is True


def test_delta_with_euler_characteristic(capsys):
    _, out = run(capsys, "alexander", "--catalog", "fermat", "--d", "3", "--chi-u", "3", "--format", "json")
    delta = json.loads(out)["delta"]
    assert delta["delta0"] == "t-1"
    assert delta["delta2"] == "t^8+t^7+t^6-2*t^5-2*t^4-2*t^3+t^2+t+1"
    code, out = run(capsys, "alexander", "--catalog", "fermat", "--d", "3", "--chi-u", "0", "--format", "json")
    assert code == 2 and json.loads(out)["error"]["type"] == "NonPolynomialResult"


def test_catalog_commands(capsys):
    code, out = run(capsys, "catalog", "list", "--format", "json")
    assert code == 0 and any(c["id"] == "hessian" for c in json.loads(out)["catalog"])
    code, out = run(capsys, "catalog", "facts", "--catalog", "zariski-sextic", "--check", "--format", "json")
    assert code == 0
    assert all(f["ok"] for f in json.loads(out)["facts"])


@pytest.mark.parametrize("cmd", ["syzygies", "witnesses", "tjurina"])
def test_other_commands(capsys, cmd):
    code, out = run(capsys, cmd, "--catalog", "zariski-sextic", "--format", "json")
    assert code == 0
    json.loads(out)
