"""Built-in reference manifolds.

``torus4`` and ``torus6`` are flat Kaehler baselines; ``kodaira_thurston``
is the nilmanifold with [xi_1, xi_4] = xi_2, omega = a3^a1 + a4^a2 and
J xi_1 = xi_3, J xi_2 = xi_4, a compact almost Kaehler manifold whose J is
not integrable.
"""
from typing import Callable, Dict, List

from ..almost_kahler import AKManifold
from ..harmonic_analysis import perturb, sample_rng
from ..shared.errors import ValidationError
from .manifest import Bracket, BracketTerm, ManifoldManifest, OmegaTerm, manifest_from_manifold, manifest_to_manifold

KT_D_ALPHA2_NOTE = (
    "The bracket [xi_1, xi_4] = xi_2 gives d alpha_2 = -alpha_1 ^ alpha_4; the variant "
    "d alpha_2 = -alpha_2 ^ alpha_4 is inconsistent with it. The brackets are trusted."
)


def _torus(dimension: int) -> ManifoldManifest:
    n = dimension // 2
    j = [["0"] * dimension for _ in range(dimension)]
    for b in range(n):
        j[2 * b][2 * b + 1] = "1"
        j[2 * b + 1][2 * b] = "-1"
    return ManifoldManifest(
        name=f"torus{dimension}",
        dimension=dimension,
        omega=[OmegaTerm(i=2 * b + 1, j=2 * b + 2, c="1") for b in range(n)],
        J=j,
        nomizu=True,
        annotations=[f"flat {dimension}-torus, Kaehler"],
    )


def _kodaira_thurston() -> ManifoldManifest:
    return ManifoldManifest(
        name="kodaira_thurston",
        dimension=4,
        brackets=[Bracket(i=1, j=4, terms=[BracketTerm(k=2, c="1")])],
        omega=[OmegaTerm(i=1, j=3, c="-1"), OmegaTerm(i=2, j=4, c="-1")],
        J=[["0", "0", "-1", "0"],
           ["0", "0", "0", "-1"],
           ["1", "0", "0", "0"],
           ["0", "1", "0", "0"]],
        nomizu=True,
        annotations=["Kodaira-Thurston nilmanifold, non-integrable almost Kaehler", KT_D_ALPHA2_NOTE],
    )


BUILTINS: Dict[str, Callable[[], ManifoldManifest]] = {
    "torus4": lambda: _torus(4),
    "torus6": lambda: _torus(6),
    "kodaira_thurston": _kodaira_thurston,
}


def list_builtins() -> List[str]:
    return list(BUILTINS)


def builtin_manifest(name: str) -> ManifoldManifest:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise ValidationError("BUILTIN", f"unknown built-in {name!r}; expected one of {', '.join(BUILTINS)}")


def builtin(name: str) -> AKManifold:
    return manifest_to_manifold(builtin_manifest(name))


def perturbed_manifest(name: str, seed: int, index: int) -> ManifoldManifest:
    """Manifest of perturbation ``index`` of built-in ``name`` for ``seed``."""
    base = builtin(name)
    m = perturb(base, sample_rng(seed, index), label=f"{name}~{seed}.{index}")
    return manifest_from_manifold(m)
