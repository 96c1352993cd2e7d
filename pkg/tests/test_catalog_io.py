import json

import pytest

from src.catalog_io import (
    builtin,
    builtin_manifest,
    hodge_diamond,
    list_builtins,
    manifest_from_manifold,
    manifest_to_manifold,
    parse_manifest,
    perturbed_manifest,
    read_manifest,
    render_report,
    render_table,
    serialize_manifest,
)
from src.harmonic_analysis import build_report
from src.shared.errors import InputOutputError, ManifestError, ValidationError

KT_TEXT = json.dumps({
    "schema": 1,
    "name": "kt",
    "dimension": 4,
    "brackets": [{"i": 1, "j": 4, "terms": [{"k": 2, "c": "1"}]}],
    "omega": [{"i": 1, "j": 3, "c": "-1"}, {"i": 2, "j": 4, "c": "-1"}],
    "J": [["0", "0", "-1", "0"], ["0", "0", "0", "-1"], ["1", "0", "0", "0"], ["0", "1", "0", "0"]],
})


def _edited(**changes) -> str:
    data = json.loads(KT_TEXT)
    data.update(changes)
    return json.dumps(data)


def test_parse_a_manifest_and_validate_it():
    manifest = parse_manifest(KT_TEXT)
    assert manifest.name == "kt"
    assert manifest.compact_quotient == "assumed"
    m = manifest_to_manifold(manifest)
    assert m.dimension == 4
    assert not m.calculus.nijenhuis.integrable


@pytest.mark.parametrize("text, pointer", [
    ("{not json", ""),
    ("[1, 2]", ""),
    (_edited(colour="blue"), "/colour"),
    (_edited(dimension="4"), "/dimension"),
    (_edited(brackets=[{"i": 1, "j": 4, "terms": []}, {"i": 1, "j": 4, "terms": []}]), "/brackets/1"),
    (_edited(brackets=[{"i": 4, "j": 1, "terms": []}]), "/brackets/0"),
    (_edited(omega=[{"i": 1, "j": 3, "c": "0.5"}]), "/omega/0/c"),
    (_edited(J=[["0", "1"], ["-1", "0"]]), "/J"),
    (_edited(J=[[0, 0, -1, 0], ["0", "0", "0", "-1"], ["1", "0", "0", "0"], ["0", "1", "0", "0"]]), "/J/0/0"),
    (_edited(schema=2), "/schema"),
])
def test_manifest_errors_carry_a_pointer(text, pointer):
    with pytest.raises(ManifestError) as info:
        parse_manifest(text)
    assert info.value.pointer == pointer
    assert info.value.exit_code == 1


def test_axiom_failures_surface_from_a_valid_manifest():
    text = _edited(omega=[{"i": 1, "j": 3, "c": "-1"}])
    with pytest.raises(ValidationError) as info:
        manifest_to_manifold(parse_manifest(text))
    assert info.value.axiom == "OMEGA_DEGENERATE"


def test_serialized_builtin_parses_back(kodaira_thurston):
    text = serialize_manifest(manifest_from_manifold(kodaira_thurston))
    assert '"schema": 1' in text
    again = manifest_to_manifold(parse_manifest(text))
    assert again.omega == kodaira_thurston.omega
    assert again.acs.matrix == kodaira_thurston.acs.matrix


def test_read_manifest_from_disk(tmp_path):
    path = tmp_path / "kt.json"
    path.write_text(KT_TEXT, encoding="utf-8")
    assert read_manifest(str(path)).name == "kt"
    with pytest.raises(InputOutputError):
        read_manifest(str(tmp_path / "missing.json"))


def test_undecodable_manifest_is_a_manifest_error(tmp_path):
    path = tmp_path / "latin1.json"
    path.write_bytes(b"\xff\xfe bad")
    with pytest.raises(ManifestError) as info:
        read_manifest(str(path))
    assert "UTF-8" in str(info.value)


def test_builtins():
    assert list_builtins() == ["torus4", "torus6", "kodaira_thurston"]
    assert builtin_manifest("kodaira_thurston").nomizu
    with pytest.raises(ValidationError) as info:
        builtin("klein_bottle")
    assert info.value.axiom == "BUILTIN"


def test_perturbed_manifest_is_reproducible():
    first = serialize_manifest(perturbed_manifest("kodaira_thurston", 5, 0))
    assert first == serialize_manifest(perturbed_manifest("kodaira_thurston", 5, 0))
    assert manifest_to_manifold(parse_manifest(first)).name == "kodaira_thurston~5.0"


def test_render_table():
    text = render_table("Gaps", [{"k": 0, "gap": "-"}, {"k": 1, "gap": "1"}], notes=["exact"])
    assert text.startswith("# Gaps")
    assert "| k | gap |" in text
    assert "| 1 | 1 | " in text
    assert "exact" in text
    assert "(nothing to show)" in render_table("Empty", [])


@pytest.mark.slow
def test_report_renders_the_hodge_diamond(torus4):
    report = build_report(torus4, seed=0)
    diamond = hodge_diamond(report)
    assert diamond["columns"] == [-2, -1, 0, 1, 2]
    assert diamond["rows"][2]["cells"] == ["1", "", "4", "", "1"]
    text = render_report(report)
    assert "# Hodge report: torus4" in text
    assert "## Hodge diamond" in text
    assert report.caveat in text
