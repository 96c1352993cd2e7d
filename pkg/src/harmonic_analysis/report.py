"""The full Hodge report of one manifold, assembled in a fixed order."""
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict

from ..almost_kahler import AKManifold
from ..exact_algebra import rational_to_string
from ..shared.config import get_config
from ..shared.logger import log
from .betti import hodge_betti_numbers
from .dlambda_norms import dlambda_norm_audit
from .hlc import hlc_audit
from .hodge import hodge_decomposition_check, pure_full_check
from .membership import FAMILIES, INEQUALITIES, inequality_audit, membership_constant
from .spaces import harmonic_space
from .spectral import mu_norms, spectral_gap
from .theorems import theorem_audit

GAP_OPERATORS = ("d", "dLambda", "dbar", "mu", "dbar+mu")

CAVEAT = ("All spaces are computed on invariant forms; verdicts concern the invariant subcomplex "
          "and equal the full ones only where invariant forms compute the cohomology.")


class HodgeReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    manifold: str
    dimension: int
    label: str
    b: List[int]
    h: Dict[str, int]
    hlc: Dict[str, bool]
    integrable: bool
    b2_plus: Optional[int] = None
    harmonic: List[List[dict]]
    decomposition: List[dict]
    pure_full: List[dict]
    lefschetz: dict
    non_hlc_degrees: List[int]
    spectral_gaps: Dict[str, List[Optional[str]]]
    mu_norms: dict
    membership: List[dict]
    inequalities: List[dict]
    dlambda_norms: List[dict]
    theorems: List[dict]
    nijenhuis: dict
    annotations: List[str]
    seed: int
    eig_width: str
    caveat: str = CAVEAT


def build_report(m: AKManifold, seed: int = None) -> HodgeReport:
    """Run every audit on ``m``; any consistency failure propagates."""
    config = get_config()
    seed = config.audit.seed if seed is None else seed
    width = config.precision.width
    degrees = range(m.dimension + 1)
    log.info(f"{m.name}: building report (seed {seed})")

    numbers = hodge_betti_numbers(m)
    hlc = hlc_audit(m)
    theorems = theorem_audit(m)
    gaps = {}
    for selection in GAP_OPERATORS:
        values = [spectral_gap(m, selection, k, width) for k in degrees]
        gaps[selection] = [v.as_string() if v is not None else None for v in values]

    report = HodgeReport(
        manifold=m.name,
        dimension=m.dimension,
        label=numbers.label,
        b=numbers.betti,
        h=numbers.to_json()["h"],
        hlc=hlc.verdicts(),
        integrable=theorems.integrable,
        b2_plus=theorems.b2_plus,
        harmonic=[[f.to_json() for f in harmonic_space(m, "d", k).forms] for k in degrees],
        decomposition=[hodge_decomposition_check(m, k).to_json() for k in degrees],
        pure_full=[pure_full_check(m, k).to_json() for k in degrees],
        lefschetz=hlc.to_json(),
        non_hlc_degrees=hlc.non_hlc_degrees,
        spectral_gaps=gaps,
        mu_norms=mu_norms(m, width).to_json(),
        membership=[membership_constant(m, name, k, width).to_json() for name in FAMILIES for k in degrees],
        inequalities=[inequality_audit(m, which, k, seed=seed).to_json() for which in INEQUALITIES for k in degrees],
        dlambda_norms=[dlambda_norm_audit(m, k).to_json() for k in range(1, m.complex_dimension + 1)],
        theorems=[c.to_json() for c in theorems.checks],
        nijenhuis=m.calculus.nijenhuis.to_json(),
        annotations=list(m.annotations),
        seed=seed,
        eig_width=rational_to_string(width),
    )
    log.info(f"{m.name}: report finished")
    return report
