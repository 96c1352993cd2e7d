import json

import pytest

from main import run
from src.shared.config import get_config, use_config


@pytest.fixture(autouse=True)
def restore_config():
    saved = get_config()
    yield
    use_config(saved)


def _json(capsys, *argv):
    assert run([*argv, "--format", "json"]) == 0
    return json.loads(capsys.readouterr().out)


def test_list_builtins(capsys):
    data = _json(capsys, "list")
    assert [row["name"] for row in data["builtins"]] == ["torus4", "torus6", "kodaira_thurston"]


def test_validate_reports_every_axiom(capsys):
    data = _json(capsys, "validate", "--builtin", "torus4")
    assert data["manifold"] == "torus4"
    assert list(data["axioms"])[0] == "DIMENSION"
    assert set(data["axioms"].values()) == {"pass"}


def test_validate_markdown(capsys):
    assert run(["validate", "--builtin", "kodaira_thurston"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# Validation: kodaira_thurston")
    assert "| METRIC_NOT_SPD | pass |" in out


def test_constants_for_one_family(capsys):
    data = _json(capsys, "constants", "--builtin", "kodaira_thurston", "--family", "Mtilde", "--degree", "1")
    (result,) = data["constants"]
    assert result["best_constant"] == "2"
    assert result["status"] == "threshold not strictly met"


def test_spectrum_accepts_the_dash_spelling(capsys):
    data = _json(capsys, "spectrum", "--builtin", "kodaira_thurston", "--operator", "dbar-mu", "--degree", "1")
    (spectrum,) = data["spectra"]
    assert spectrum["operator"] == "dbar+mu"
    assert spectrum["gap"] == "1/4"


def test_eig_width_in_power_form(capsys):
    data = _json(capsys, "spectrum", "--builtin", "kodaira_thurston", "--operator", "d", "--degree", "1",
                 "--eig-width", "1/10^3")
    assert data["eig_width"] == "1/1000"


def test_hlc_command(capsys):
    data = _json(capsys, "hlc", "--builtin", "kodaira_thurston")
    assert data["hlc"] == {"k1": False}


def test_identities_pass_on_kodaira_thurston(capsys):
    data = _json(capsys, "identities", "--builtin", "kodaira_thurston", "--seed", "3")
    assert all(check["status"] == "pass" for check in data["checks"])


def test_decompose_a_form(capsys):
    data = _json(capsys, "decompose", "--builtin", "kodaira_thurston", "--form", '{"e1": "1", "e2": {"re": "1"}}')
    (one,) = data["degrees"]
    assert list(one["hodge"]["harmonic"]) == ["e1"]
    assert list(one["hodge"]["coexact"]) == ["e2"]


def test_manifest_file(tmp_path, capsys):
    path = tmp_path / "torus.json"
    path.write_text(json.dumps({
        "name": "flat", "dimension": 2, "omega": [{"i": 1, "j": 2, "c": "1"}], "J": [["0", "1"], ["-1", "0"]],
    }), encoding="utf-8")
    data = _json(capsys, "validate", "--file", str(path))
    assert data["manifold"] == "flat"


@pytest.mark.parametrize("argv, status", [
    (["validate"], 1),
    (["frobnicate", "--builtin", "torus4"], 1),
    (["validate", "--builtin", "torus4", "--file", "x.json"], 1),
    (["validate", "--builtin", "klein_bottle"], 1),
    (["decompose", "--builtin", "torus4"], 1),
    (["decompose", "--builtin", "torus4", "--form", "[1]"], 1),
    (["validate", "--builtin", "torus4", "--eig-width", "0"], 1),
    (["validate", "--file", "does/not/exist.json"], 3),
    (["validate", "--builtin", "torus4", "--config", "does/not/exist.yml"], 3),
])
def test_exit_codes(argv, status, capsys):
    assert run(argv) == status
    assert "error: " in capsys.readouterr().err


def test_bad_manifest_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"name": "x", "dimension": 4, "omega": [], "J": []', encoding="utf-8")
    assert run(["validate", "--file", str(path)]) == 1
    assert "MANIFEST" in capsys.readouterr().err


def test_undecodable_files_exit_1(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_bytes(b"\xff\xfe bad")
    assert run(["validate", "--file", str(path)]) == 1
    assert "error: " in capsys.readouterr().err
    config = tmp_path / "bad.yml"
    config.write_bytes(b"precision: \xff\xfe")
    assert run(["validate", "--builtin", "torus4", "--config", str(config)]) == 1
    assert "error: " in capsys.readouterr().err


@pytest.mark.slow
def test_report_json(capsys):
    data = _json(capsys, "report", "--builtin", "kodaira_thurston")
    assert data["b"] == [1, 3, 4, 3, 1]
    assert data["hlc"] == {"k1": False}
    assert data["b2_plus"] == 2
