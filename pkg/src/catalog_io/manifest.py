"""JSON manifests describing an almost Kaehler Lie algebra.

Rationals travel as strings ("p" or "p/q") so nothing passes through floats.
Every structural error is a ``ManifestError`` carrying a JSON pointer.
"""
import json
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field
from pydantic import ValidationError as PydanticValidationError

from ..almost_kahler import AKManifold, AlmostComplexStructure, validate_ak
from ..exact_algebra import parse_rational, rational_to_string
from ..exterior import FormValue
from ..lie_algebra import LieAlgebraData
from ..shared.errors import InputOutputError, ManifestError
from ..shared.logger import log

SCHEMA_VERSION = 1


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True, populate_by_name=True)


class BracketTerm(_Strict):
    k: int
    c: str


class Bracket(_Strict):
    i: int
    j: int
    terms: List[BracketTerm]


class OmegaTerm(_Strict):
    i: int
    j: int
    c: str


class ManifoldManifest(_Strict):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    name: str
    dimension: int
    brackets: List[Bracket] = []
    omega: List[OmegaTerm]
    J: List[List[str]]
    compact_quotient: Literal["assumed", "known"] = "assumed"
    nomizu: bool = False
    annotations: List[str] = []


def _pointer(loc) -> str:
    return "/" + "/".join("schema" if part == "schema_version" else str(part) for part in loc)


def _check_pair(i: int, j: int, n: int, pointer: str):
    if not 1 <= i < j <= n:
        raise ManifestError(f"index pair ({i},{j}) needs 1 <= i < j <= {n}", pointer)


def check_manifest(manifest: ManifoldManifest) -> None:
    """Semantic checks pydantic cannot express: index ranges, duplicates, rationals."""
    n = manifest.dimension
    if manifest.schema_version != SCHEMA_VERSION:
        raise ManifestError(f"unsupported schema version {manifest.schema_version}", "/schema")
    if n < 1:
        raise ManifestError(f"dimension must be positive, got {n}", "/dimension")
    seen = set()
    for b, bracket in enumerate(manifest.brackets):
        at = f"/brackets/{b}"
        _check_pair(bracket.i, bracket.j, n, at)
        if (bracket.i, bracket.j) in seen:
            raise ManifestError(f"duplicate bracket ({bracket.i},{bracket.j})", at)
        seen.add((bracket.i, bracket.j))
        targets = set()
        for t, term in enumerate(bracket.terms):
            if not 1 <= term.k <= n:
                raise ManifestError(f"target index {term.k} outside 1..{n}", f"{at}/terms/{t}/k")
            if term.k in targets:
                raise ManifestError(f"duplicate target index {term.k}", f"{at}/terms/{t}/k")
            targets.add(term.k)
            parse_rational(term.c, f"{at}/terms/{t}/c")
    pairs = set()
    for t, term in enumerate(manifest.omega):
        _check_pair(term.i, term.j, n, f"/omega/{t}")
        if (term.i, term.j) in pairs:
            raise ManifestError(f"duplicate omega term ({term.i},{term.j})", f"/omega/{t}")
        pairs.add((term.i, term.j))
        parse_rational(term.c, f"/omega/{t}/c")
    if len(manifest.J) != n:
        raise ManifestError(f"J needs {n} rows, got {len(manifest.J)}", "/J")
    for r, row in enumerate(manifest.J):
        if len(row) != n:
            raise ManifestError(f"J row needs {n} entries, got {len(row)}", f"/J/{r}")
        for c, entry in enumerate(row):
            parse_rational(entry, f"/J/{r}/{c}")


def parse_manifest(text: str) -> ManifoldManifest:
    """Strictly parse manifest JSON; all rationals are checked exactly."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ManifestError(f"invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})", "")
    if not isinstance(data, dict):
        raise ManifestError("manifest must be a JSON object", "")
    try:
        manifest = ManifoldManifest.model_validate(data)
    except PydanticValidationError as e:
        first = e.errors()[0]
        raise ManifestError(first["msg"], _pointer(first["loc"]))
    check_manifest(manifest)
    return manifest


def serialize_manifest(manifest: ManifoldManifest) -> str:
    return manifest.model_dump_json(by_alias=True, indent=2)


def read_manifest(path: str) -> ManifoldManifest:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputOutputError(f"cannot read manifest {path}: {e}")
    except UnicodeDecodeError as e:
        raise ManifestError(f"manifest {path} is not UTF-8 text: {e.reason} at byte {e.start}")
    log.info(f"Loaded manifest {path}")
    return parse_manifest(text)


def _omega_form(manifest: ManifoldManifest) -> FormValue:
    coeffs = {(t.i, t.j): parse_rational(t.c) for t in manifest.omega}
    return FormValue(manifest.dimension, {k: v for k, v in coeffs.items() if v})


def _brackets(manifest: ManifoldManifest) -> Dict[Tuple[int, int], List[Tuple[int, Fraction]]]:
    return {(b.i, b.j): [(t.k, parse_rational(t.c)) for t in b.terms] for b in manifest.brackets}


def manifest_to_manifold(manifest: ManifoldManifest) -> AKManifold:
    """Validate the manifest's structure; axiom failures raise ``ValidationError``."""
    algebra = LieAlgebraData.from_terms(manifest.dimension, _brackets(manifest))
    acs = AlmostComplexStructure.from_rows([[parse_rational(x) for x in row] for row in manifest.J])
    manifold = validate_ak(
        manifest.name, algebra, acs, _omega_form(manifest),
        compact_quotient=manifest.compact_quotient,
        nomizu=manifest.nomizu,
        annotations=manifest.annotations,
    )
    log.info(f"Loaded manifold {manifest.name} (dimension {manifest.dimension})")
    return manifold


def manifest_from_manifold(m: AKManifold) -> ManifoldManifest:
    """Canonical manifest of a validated manifold: sorted keys, reduced rationals."""
    brackets = []
    for (i, j), terms in sorted(m.algebra.brackets.items()):
        kept = [BracketTerm(k=k, c=rational_to_string(c)) for k, c in sorted(terms) if c]
        if kept:
            brackets.append(Bracket(i=i, j=j, terms=kept))
    omega = [OmegaTerm(i=mono[0], j=mono[1], c=rational_to_string(coeff.re))
             for mono, coeff in sorted(m.omega.coefficients.items())]
    return ManifoldManifest(
        schema_version=SCHEMA_VERSION,
        name=m.name,
        dimension=m.dimension,
        brackets=brackets,
        omega=omega,
        J=m.acs.to_strings(),
        compact_quotient=m.compact_quotient,
        nomizu=m.nomizu,
        annotations=list(m.annotations),
    )
