"""Command line surface: formats, schemas, exit codes, determinism."""

import io
import contextlib
import json

import jsonschema
import pytest

from rpphilb.cli import main

try:
    from importlib.resources import files as _resource_files
except ImportError:  # pragma: no cover
    _resource_files = None

import frozen_tables as FT


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def load_schema(name):
    path = _resource_files("rpphilb").joinpath(f"schemas/{name}.schema.json")
    return json.loads(path.read_text())


def check(instance, schema_name):
    jsonschema.validate(instance, load_schema(schema_name))


# -- happy paths -------------------------------------------------------------


def test_weight_text_and_json():
    code, out, _ = run_cli("weight", FT.SQUARE_TEXT)
    assert (code, out) == (0, "4\n")
    code, out, _ = run_cli("weight", FT.SQUARE_TEXT, "--format", "json")
    obj = json.loads(out)
    check(obj, "weight")
    assert obj["weight"] == 4


def test_indicators_json_schema():
    code, out, _ = run_cli("indicators", "2,2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    check(obj, "indicators")
    assert obj["count"] == 5
    assert [entry["text"] for entry in obj["indicators"]] == FT.SQUARE_INDICATORS


def test_factorizations_text_marks_standard_and_complete():
    code, out, _ = run_cli("factorizations", FT.SQUARE_TEXT)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "3 factorizations of weight 4"
    assert lines[1].endswith("(standard)")
    assert lines[3].endswith("(complete)")


def test_factorizations_json_schema():
    code, out, _ = run_cli("factorizations", FT.SQUARE_TEXT, "--format", "json")
    obj = json.loads(out)
    check(obj, "factorizations")
    assert obj["count"] == 3
    assert obj["standard_index"] == 0
    assert obj["complete_index"] == 2


def test_classify_text_headline_and_json():
    code, out, _ = run_cli("classify", FT.SQUARE_TEXT)
    assert code == 0
    assert out.splitlines()[0] == "3 components, 1 singular"
    code, out, _ = run_cli("classify", FT.SQUARE_TEXT, "--format", "json")
    reports = json.loads(out)
    check(reports, "classify")
    assert [rep["smooth"] for rep in reports] == [True, False, True]


def test_equations_json_schema():
    for argv in (
        ("equations", "--type", "I", FT.GRID_TEXT),
        ("equations", "--type", "II", FT.GRID_TEXT),
        ("equations", "--type", "II", "--minimal-border", FT.GRID_TEXT),
        ("equations", "--type", "I", "--tangent", FT.GRID_TEXT),
    ):
        code, out, _ = run_cli(*argv, "--format", "json")
        assert code == 0
        check(json.loads(out), "equations")


def test_equations_tangent_payload():
    code, out, _ = run_cli(
        "equations", "--type", "II", "--tangent", FT.GRID_TEXT, "--format", "json"
    )
    obj = json.loads(out)
    assert obj["tangent_dim"] == FT.TANGENT_DIM
    assert obj["presentation"]["n_vars"] == FT.TYPE_II_N_VARS


def test_series_json_schema_both_modes():
    code, out, _ = run_cli("series", "--curve", "A1", "--max-size", "3", "2,2", "--format", "json")
    assert code == 0
    entries = json.loads(out)
    check(entries, "series")
    assert entries[0] == {"exponents": [0, 0, 0, 0], "coefficient": {"0": 1}}
    code, out, _ = run_cli(
        "series", "--euler", "1", "--single-variable", "--max-size", "4", "2,2", "--format", "json"
    )
    entries = json.loads(out)
    check(entries, "series")
    assert [entry["coefficient"]["0"] for entry in entries] == [1, 1, 3, 4, 7]


def test_count_points_json():
    code, out, _ = run_cli(
        "count-points", FT.REFINEMENT_GAP_TEXT, "--p", "2", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    check(obj, "count_points")
    assert obj["count"] == FT.REFINEMENT_GAP_COUNT
    assert obj["motive_at_p"] == FT.REFINEMENT_GAP_BOX_PREDICTION
    assert obj["match"] is False


def test_rpp_argument_accepts_json_file(tmp_path):
    payload = tmp_path / "filling.json"
    payload.write_text(json.dumps({"rows": [[0, 2], [2, 4]]}))
    code, out, _ = run_cli("weight", f"@{payload}")
    assert (code, out) == (0, "4\n")


def test_output_is_deterministic():
    first = run_cli("classify", FT.GRID_TEXT, "--format", "json")
    second = run_cli("classify", FT.GRID_TEXT, "--format", "json")
    assert first == second


# -- verify ------------------------------------------------------------------


def test_verify_bundled_corpus_passes():
    code, out, _ = run_cli("verify")
    assert code == 0
    assert out.strip().splitlines()[-1] == "22/22 rows passed"


def test_verify_json_schema():
    code, out, _ = run_cli("verify", "--format", "json")
    assert code == 0
    check(json.loads(out), "verify")


def test_verify_perturbed_corpus_fails(tmp_path):
    from rpphilb.verify import load_corpus

    corpus = load_corpus()
    corpus["rows"][0]["expected"]["weight"] = 99
    bad = tmp_path / "corpus.json"
    bad.write_text(json.dumps(corpus))
    code, out, _ = run_cli("verify", str(bad))
    assert code == 2
    assert "FAIL" in out


def test_verify_empty_corpus_is_an_error(tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text(json.dumps({"version": 1, "rows": []}))
    code, _, err = run_cli("verify", str(empty))
    assert code == 1
    assert json.loads(err)["code"] == "parse-error"


# -- error objects and exit codes ---------------------------------------------


def test_domain_error_payload_schema():
    for argv in (
        ("weight", "1 0"),
        ("bogus",),
        ("series", "2,2"),
        ("series", "--curve", "A1", "--euler", "1", "2,2"),
        ("equations", "--type", "I", "--minimal-border", FT.SQUARE_TEXT),
        ("count-points", "1", "--p", "4"),
    ):
        code, out, err = run_cli(*argv)
        assert code == 1
        assert out == ""
        payload = json.loads(err)
        check(payload, "error")


def test_cap_errors_exit_2():
    code, _, err = run_cli("count-points", "30", "--p", "2")
    assert code == 2
    payload = json.loads(err)
    check(payload, "error")
    assert payload["code"] == "budget-exceeded"
    code, _, err = run_cli("count-points", "1", "--p", "11")
    assert code == 2
    assert json.loads(err)["code"] == "cap-exceeded"


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("RPPHILB_MAX_BUDGET", "4")
    code, _, err = run_cli("count-points", "3", "--p", "2")
    assert code == 2
    assert json.loads(err)["code"] == "budget-exceeded"
