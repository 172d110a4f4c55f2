import csv
import io as stdio
import json

import pytest

from ap3lab import io
from ap3lab.cli import main
from ap3lab.constructions import evenly_spread


def run(*argv):
    out = stdio.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def f8(tmp_path):
    path = tmp_path / "f8.json"
    io.dump(evenly_spread(8), path)
    return str(path)


def test_count_json(f8):
    code, text = run("count", f8)
    assert code == 0
    assert json.loads(text) == {"n": 8, "total": 40, "weights": [5] * 8}


@pytest.mark.parametrize("method", ["naive", "grouped", "auto"])
def test_count_csv(f8, method):
    code, text = run("count", f8, "--csv", "--method", method)
    rows = list(csv.reader(stdio.StringIO(text)))
    assert code == 0 and rows[0] == ["index", "weight"] and rows[-1] == ["total", "40"]


def test_construct_roundtrip(tmp_path):
    path = tmp_path / "t.json"
    assert run("construct", "tree-ball", "--r", "3", "--d0", "2", "-o", str(path))[0] == 0
    code, text = run("count", str(path))
    assert json.loads(text)["total"] == 58


def test_construct_to_stdout_with_offset():
    code, text = run("construct", "evenly-spread", "--n", "4", "--offset", "1/16")
    assert code == 0
    assert io.loads(text).points[0] == io.loads('{"space":{"kind":"circle"},"points":["1/16"]}').points[0]


def test_construct_rejects_stray_flags():
    assert run("construct", "line-ap", "--n", "3", "--r", "2")[0] == 2
    assert run("construct", "f-minus2", "--n", "4")[0] == 2


def test_predict():
    assert run("predict", "circle", "8") == (0, "40\n")
    code, text = run("predict", "tree", "2", "--r", "3", "--format", "json")
    assert json.loads(text)["value"] == 58
    assert run("predict", "tree", "2")[0] == 2
    assert run("predict", "circle-cap-mod2", "8")[0] == 2


def test_table_skips_undefined_rows():
    code, text = run("table", "circle-cap-mod2", "--n-max", "10")
    rows = list(csv.DictReader(stdio.StringIO(text)))
    assert [r["n"] for r in rows] == ["2", "6", "10"]
    code, text = run("table", "general-cap", "--n-min", "4", "--n-max", "6", "--format", "json")
    assert [r["prediction"] for r in json.loads(text)] == [12, 25, 42]


def test_search_exhaustive(f8):
    code, text = run("search", "--ground", f8, "--n", "4", "--exhaustive")
    d = json.loads(text)
    assert code == 0 and d["best_value"] == 12 and len(d["witness_sets"]) == 2


def test_search_budget_is_an_error(f8):
    assert run("search", "--ground", f8, "--n", "4", "--exhaustive", "--budget", "3")[0] == 2


def test_search_stochastic_is_reproducible(f8):
    a = run("search", "--ground", f8, "--n", "6", "--seed", "3", "--proposals", "500")
    b = run("search", "--ground", f8, "--n", "6", "--seed", "3", "--proposals", "500", "--workers", "4")
    assert a == b and json.loads(a[1])["seed"] == 3


@pytest.mark.parametrize("suite", ["s1-families", "equator", "trees", "bipartite-radial", "line", "all"])
def test_verify_suites_pass(suite):
    code, text = run("verify", suite)
    d = json.loads(text)
    assert code == 0 and d["passed"] and not d["failures"] and d["checks"] > 0


def test_verify_csv():
    code, text = run("verify", "line", "--n-max", "4", "--format", "csv")
    assert code == 0 and len(text.splitlines()) == 6


def test_parse_error_reports_offset(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"space": {"kind": "circle"}, "points": [}')
    assert run("count", str(bad))[0] == 2
    assert "byte offset 41" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert run("count", str(tmp_path / "nope.json"))[0] == 2


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as err:
        main(["count"])
    assert err.value.code == 2
