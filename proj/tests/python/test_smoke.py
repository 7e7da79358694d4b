import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import powermonoid as pm

SCHEMA_PATH = pathlib.Path(__file__).resolve().parents[2] / "schema" / "cli_output.schema.json"
SCHEMA = json.loads(SCHEMA_PATH.read_text())


def cli_json(*args):
    code, out, err = pm.run_cli(list(args))
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc


def test_sumset_matches_naive_path():
    assert pm.sumset([-1, 0, 2], [0, 1, 3]) == [-1, 0, 1, 2, 3, 5]
    assert pm.sumset([-1, 0, 2], [0, 2, 3]) == pm.interval(-1, 5)
    assert pm.sumset([0, 7, 300], [-4, 9]) == pm.sumset_naive([0, 7, 300], [-4, 9])


def test_kfold_and_boxing():
    assert pm.kfold([-1, 0, 2], 2) == [-2, -1, 0, 1, 2, 4]
    assert pm.kfold([3, 5], 0) == [0]
    assert pm.bdim([-5, -4, -2, 0, 1, 5, 6, 7]) == 4
    assert pm.runs([-5, -4, -2, 0, 1, 5, 6, 7]) == [(-5, -4), (-2, -2), (0, 1), (5, 7)]


def test_factorizations_and_atoms():
    pairs = pm.factorizations([-1, 0, 1, 2])
    assert sorted(pairs) == sorted([([-1, 0], [0, 1, 2]), ([-1, 0], [0, 2]), ([-1, 0, 1], [0, 1])])
    assert pm.factorizations([-1, 0, 2]) == []
    assert pm.is_atom([-1, 0, 2])
    with pytest.raises(ValueError):
        pm.is_atom([1, 2])


def test_automorphisms():
    assert pm.apply("negation", [-1, 0, 2]) == [-2, 0, 1]
    assert pm.apply("sigma0", [-1, 0]) == pm.apply("sigma0", [0, 1]) == [0, 1]
    assert pm.apply("identity", [0, 4]) == [0, 4]


def test_parse_errors_are_value_errors():
    assert pm.parse_set(" -2..1 ") == [-2, -1, 0, 1]
    with pytest.raises(pm.ParseError):
        pm.parse_set("{1,,2}")


@pytest.mark.parametrize("target", ["lemma21", "lemma22", "lemma23", "sigma0"])
def test_verification_suites_pass(target):
    report = pm.verify(target, seed=3, samples=100)
    assert report["lemma"] == target
    assert report["pass"], report


def test_window_search_small():
    assert pm.search_window(1) == {"survivors": 2, "has_identity": True, "has_negation": True}
    assert pm.search_window(2, prune=False)["survivors"] == pm.search_window(2)["survivors"]


def test_cli_documents_validate_against_schema():
    assert cli_json("sum", "{-1,0,2}", "{0,1,3}", "--output", "json") == (
        0, {"op": "sum", "result": "{-1,0,1,2,3,5}"})
    assert cli_json("bdim", "{-5,-4,-2,0,1,5,6,7}", "--output", "json")[1]["result"] == 4
    assert cli_json("runs", "{0,1,3}") == (0, [[0, 1], [3, 3]])
    assert cli_json("factor", "{-1,0,2}")[1]["atom"] is True
    for target in ["lemma21", "lemma22", "lemma23", "sigma0", "theorem"]:
        code, doc = cli_json("verify", target, "--samples", "50")
        assert code == 0 and doc["pass"]
    code, doc = cli_json("verify", "theorem", "--case", "2", "--A", "{-2,0,1,2,5}",
                         "--B", "{-2,0,1,5}", "--c", "11")
    assert code == 0 and doc["A+C"] == doc["B+C"] == "{" + ",".join(map(str, range(3, 17))) + "}"
    code, doc = cli_json("search-autos", "--window", "2", "--oracle")
    assert code == 0 and doc["oracle"]["match"]


def test_cli_scalar_defaults_and_usage_errors():
    assert pm.run_cli(["sum", "{-1,0,2}", "{0,1,3}"]) == (0, "{-1,0,1,2,3,5}\n", "")
    code, out, err = pm.run_cli(["sum", "{-1,0,2}", "bad"])
    assert code == 2 and out == "" and "'bad'" in err and err.count("\n") == 1
    assert pm.run_cli(["factor", "{1,2}"])[0] == 2
    assert pm.run_cli(["frobnicate"])[0] == 2


@pytest.mark.skipif("POWERMONOID_CLI" not in os.environ, reason="CLI binary path not provided")
def test_cli_binary_is_deterministic():
    exe = os.environ["POWERMONOID_CLI"]
    argv = [exe, "verify", "lemma23", "--seed", "9", "--samples", "40"]
    first = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert first == second
    jsonschema.validate(json.loads(first), SCHEMA)
