"""Manifests, the built-in catalogue and report rendering."""
from .manifest import (
    Bracket,
    BracketTerm,
    ManifoldManifest,
    OmegaTerm,
    check_manifest,
    manifest_from_manifold,
    manifest_to_manifold,
    parse_manifest,
    read_manifest,
    serialize_manifest,
)
from .builtins import BUILTINS, builtin, builtin_manifest, list_builtins, perturbed_manifest
from .render import hodge_diamond, render_report, render_table, verdict_rows

__all__ = [
    'Bracket', 'BracketTerm', 'ManifoldManifest', 'OmegaTerm', 'check_manifest',
    'manifest_from_manifold', 'manifest_to_manifold', 'parse_manifest', 'read_manifest', 'serialize_manifest',
    'BUILTINS', 'builtin', 'builtin_manifest', 'list_builtins', 'perturbed_manifest',
    'hodge_diamond', 'render_report', 'render_table', 'verdict_rows',
]
