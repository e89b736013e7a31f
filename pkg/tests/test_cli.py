import json

import pytest

from ppdim.cli import _main


def run(capsys, *argv):
    code = _main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ppdim_text(capsys):
    assert run(capsys, "ppdim", "--p", "5", "--invariants", "3") == (0, "3\n", "")


def test_ppdim_json(capsys):
    code, out, _ = run(capsys, "ppdim", "--p", "7", "--invariants", "4,1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"p": 7, "invariants": [4, 1], "ppdim": 5}


def test_size_of_integer(capsys):
    code, out, _ = run(capsys, "size", "--p", "7", "--x", "4")
    assert (code, out) == (0, "5\n")


def test_size_needs_p(capsys):
    code, _, err = run(capsys, "size", "--x", "4")
    assert code == 2
    assert "needs --p" in err


def test_non_prime_rejected(capsys):
    code, out, err = run(capsys, "ppdim", "--p", "4", "--invariants", "2")
    assert code == 2
    assert out == ""
    assert "p must be prime" in err


def test_invariant_out_of_range(capsys):
    code, _, err = run(capsys, "decompose", "--p", "3", "--invariants", "4")
    assert code == 2
    assert "out of range" in err


def test_bad_invariant_list(capsys):
    code, _, err = run(capsys, "decompose", "--p", "3", "--invariants", "2,x")
    assert code == 2
    assert "comma-separated integers" in err


def test_decompose_matrix_file(capsys, tmp_path):
    matrix = tmp_path / "m.json"
    matrix.write_text(json.dumps([[0, 0, 0], [1, 0, 0], [0, 1, 0]]))
    code, out, _ = run(capsys, "decompose", "--p", "5", "--matrix-file", str(matrix))
    assert (code, out) == (0, "{3}\n")

    code, out, _ = run(capsys, "decompose", "--p", "5", "--matrix-file", str(matrix), "--format", "json")
    assert json.loads(out) == {"p": 5, "invariants": [3], "dim": 3}


def test_non_nilpotent_matrix(capsys, tmp_path):
    matrix = tmp_path / "bad.json"
    matrix.write_text("[[1, 0], [0, 0]]")
    code, _, err = run(capsys, "decompose", "--p", "3", "--matrix-file", str(matrix))
    assert code == 2
    assert "not a k[T]/T^p module" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "decompose", "--p", "3", "--matrix-file", str(tmp_path / "absent.json"))
    assert code == 2
    assert "Cannot read" in err


def test_module_file(capsys, tmp_path):
    module = tmp_path / "module.json"
    module.write_text(json.dumps({"p": 5, "invariants": [4, 2]}))
    code, out, _ = run(capsys, "size", "--module", str(module))
    assert (code, out) == (0, "2\n")


@pytest.mark.parametrize("doc, message", [
    ({"p": 3, "invariants": 3}, "'invariants' must be a list of integers"),
    ({"p": 3, "invariants": ["2"]}, "'invariants' must be a list of integers"),
    ({"p": 3, "matrix": [["a"]]}, "entries must be integers"),
    ({"p": 3, "matrix": [[0, 1.5], [0, 0]]}, "entries must be integers"),
    ({"p": 3, "matrix": 7}, "must be a list of rows"),
    ({"p": "3", "invariants": [2]}, "'p' must be an integer"),
])
def test_malformed_module_file(capsys, tmp_path, doc, message):
    module = tmp_path / "module.json"
    module.write_text(json.dumps(doc))
    code, out, err = run(capsys, "decompose", "--module", str(module))
    assert code == 2
    assert out == ""
    assert message in err


def test_bare_matrix_with_text_entries(capsys, tmp_path):
    matrix = tmp_path / "m.json"
    matrix.write_text('[[0, "x"], [0, 0]]')
    code, _, err = run(capsys, "decompose", "--p", "3", "--matrix-file", str(matrix))
    assert code == 2
    assert "entries must be integers" in err


def test_unknown_log_level(capsys):
    code, out, err = run(capsys, "size", "--p", "5", "--x", "2", "--log-level", "LOUD")
    assert code == 2
    assert out == ""
    assert "Unknown log level 'LOUD'" in err


def test_no_module_given(capsys):
    code, _, err = run(capsys, "ppdim")
    assert code == 2
    assert "No module given" in err


def test_resolve_check(capsys):
    code, out, _ = run(capsys, "resolve", "--p", "5", "--invariants", "3", "--check")
    assert code == 0
    doc = json.loads(out)
    assert doc["check"] is True
    assert doc["length"] == 3
    assert doc["dims"] == [5, 6, 5, 1]
    assert doc["trace"] == [[3, 0, 2], [2, 1, 4], [4, 0, 1]]


def test_resolve_m2_p3(capsys):
    code, out, _ = run(capsys, "resolve", "--p", "3", "--invariants", "2", "--check")
    doc = json.loads(out)
    assert (code, doc["length"], doc["check"]) == (0, 1, True)
    assert all(set(term) <= {1, 3} for term in doc["terms"])


def test_resolve_prime_limit(capsys, tmp_path):
    config = tmp_path / "limits.properties"
    config.write_text("ppdim.cli.max-resolve-prime=3\n")
    code, _, err = run(capsys, "resolve", "--p", "5", "--invariants", "3", "--config", str(config))
    assert code == 2
    assert "limited to p <= 3" in err


def test_unsupported_config(capsys, tmp_path):
    config = tmp_path / "settings.toml"
    config.write_text("")
    code, _, err = run(capsys, "size", "--p", "5", "--x", "2", "--config", str(config))
    assert code == 2
    assert "Unsupported config file format" in err


def test_chain_outputs(capsys):
    assert run(capsys, "chain", "--p", "5")[:2] == (0, "1 - 4 - 2 - 3\n")
    code, out, _ = run(capsys, "chain", "--p", "5", "--dot")
    assert code == 0
    assert "x1 -- x4;" in out
    code, out, _ = run(capsys, "chain", "--p", "7", "--format", "json")
    assert json.loads(out) == {"p": 7, "chain": [1, 6, 2, 5, 3, 4]}


def test_oracle_agrees(capsys):
    code, out, _ = run(capsys, "oracle", "--p", "3", "--invariants", "2,1")
    assert code == 0
    assert out == "oracle 1 (certified), size 1\n"


def test_oracle_exhausted(capsys):
    code, out, _ = run(capsys, "oracle", "--p", "5", "--invariants", "3", "--max-depth", "1", "--format", "json")
    assert code == 1
    doc = json.loads(out)
    assert doc["value"] is None
    assert doc["label"] == "budget exhausted"
    assert doc["agrees"] is False


def test_oracle_rejects_non_positive_budget(capsys):
    code, out, err = run(capsys, "oracle", "--p", "3", "--invariants", "2", "--max-depth", "0")
    assert code == 2
    assert out == ""
    assert "max_depth must be a positive integer" in err
    assert "budget exceeded" not in err


def test_verify_closed_form(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "closed-form")
    assert code == 0
    assert out.startswith("closed-form: ok (")


def test_verify_json_is_deterministic(capsys):
    first = run(capsys, "verify", "--suite", "prop37", "--seed", "5", "--trials", "5", "--max-dim", "3",
                "--format", "json")
    second = run(capsys, "verify", "--suite", "prop37", "--seed", "5", "--trials", "5", "--max-dim", "3",
                 "--format", "json")
    assert first[0] == 0
    assert first[1] == second[1]
    (report,) = json.loads(first[1])
    assert report["suite"] == "prop37" and report["seed"] == 5


def test_verify_markdown(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "closed-form", "--format", "markdown")
    assert code == 0
    assert out.splitlines()[0] == "| suite | seed | checked | failures | status |"


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as excinfo:
        _main(["frobnicate"])
    assert excinfo.value.code == 2
