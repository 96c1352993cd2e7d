"""Implications between spectral thresholds and harmonic-space identities.

Each check evaluates its premise and its conclusion independently and only
asserts premise => conclusion. Converses are never asserted.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional

from ..almost_kahler import AKManifold
from ..exact_algebra import ExactMatrix
from ..shared.errors import ConsistencyError
from ..shared.logger import log
from .hodge import hodge_decomposition_check, pure_full_check
from .membership import membership_constant
from .spaces import harmonic_space, intersection, same_span


@dataclass
class TheoremCheck:
    name: str
    premise: bool
    conclusion: bool
    degree: Optional[int] = None

    @property
    def status(self) -> str:
        if not self.premise:
            return "vacuous"
        return "holds" if self.conclusion else "violated"

    def to_json(self) -> Dict:
        return {"name": self.name, "degree": self.degree, "premise": self.premise,
                "conclusion": self.conclusion, "status": self.status}


@dataclass
class TheoremReport:
    integrable: bool
    b2_plus: Optional[int] = None
    checks: List[TheoremCheck] = field(default_factory=list)

    def record(self, name: str, premise: bool, conclusion: bool, degree: Optional[int] = None):
        self.checks.append(TheoremCheck(name, bool(premise), bool(conclusion), degree))

    @property
    def violations(self) -> List[TheoremCheck]:
        return [c for c in self.checks if c.status == "violated"]

    def to_json(self) -> Dict:
        return {
            "integrable": self.integrable,
            "b2_plus": self.b2_plus,
            "checks": [c.to_json() for c in self.checks],
        }


def self_dual_dimension(m: AKManifold) -> int:
    """b_2^+: dimension of the self-dual d-harmonic 2-forms (dimension 4 only)."""
    size = comb(m.dimension, 2)
    star = m.calculus.star.block(2)
    self_dual = (star - ExactMatrix.identity(size)).nullspace()
    return len(intersection(harmonic_space(m, "d", 2).basis, self_dual, size))


def _dlambda_equal(m: AKManifold, k: int) -> bool:
    size = comb(m.dimension, k)
    return same_span(harmonic_space(m, "d", k).basis, harmonic_space(m, "dLambda", k).basis, size)


def theorem_audit(m: AKManifold) -> TheoremReport:
    """Threshold implications, kernel identities and the dimension-4 rigidity checks."""
    n = m.complex_dimension
    calc = m.calculus
    nijenhuis = calc.nijenhuis
    report = TheoremReport(integrable=nijenhuis.integrable)
    report.record("nijenhuis_detectors_agree", True, nijenhuis.detectors_agree)

    decomposes = {k: hodge_decomposition_check(m, k).holds for k in range(m.dimension + 1)}
    for k in range(m.dimension + 1):
        report.record("decomposition_threshold", membership_constant(m, "M", k).meets_threshold, decomposes[k], k)
        pure_full_check(m, k)
    for k in range(1, n + 1):
        report.record("dlambda_threshold", membership_constant(m, "Mtilde", k).meets_threshold,
                      _dlambda_equal(m, k), k)

    for k in range(m.dimension + 1):
        size = comb(m.dimension, k)
        both = intersection(harmonic_space(m, "d", k).basis, harmonic_space(m, "dLambda", k).basis, size)
        kernels = [harmonic_space(m, s, k).basis for s in ("dbar+mu", "del+mubar")]
        report.record("kernel_intersection", True, all(same_span(both, kern, size) for kern in kernels), k)

    if n >= 1:
        size = m.dimension
        both = intersection(harmonic_space(m, "d", 1).basis, harmonic_space(m, "dLambda", 1).basis, size)
        split = harmonic_space(m, "del,dbar,mu,mubar", 1).basis
        report.record("one_form_intersection", True, same_span(both, split, size), 1)
        c1 = membership_constant(m, "M", 1)
        report.record("one_form_decomposition", c1.best_constant.compare(2) > 0, decomposes[1], 1)
        report.record("membership_above_half", True, c1.best_constant.compare(Fraction(1, 2)) > 0, 1)
    if m.dimension >= 4:
        report.record("pure_degree_two", True, pure_full_check(m, 2).pure, 2)

    if n == 2:
        c2 = membership_constant(m, "M", 2)
        report.record("membership_above_half", True, c2.best_constant.compare(Fraction(1, 2)) > 0, 2)
        b2_plus = self_dual_dimension(m)
        h20 = harmonic_space(m, "d", (2, 0)).size
        report.b2_plus = b2_plus
        report.record("self_dual_floor", True, b2_plus >= 1, 2)
        report.record("self_dual_count", decomposes[2], b2_plus == 1 + 2 * h20, 2)
        report.record("non_integrable_no_20_forms", not nijenhuis.integrable, h20 == 0, 2)
        report.record("rigidity", b2_plus >= 2 and decomposes[2], nijenhuis.integrable, 2)
        report.record("rigidity_threshold", b2_plus >= 2 and c2.meets_threshold, nijenhuis.integrable, 2)

    if report.violations:
        names = ", ".join(f"{c.name}@{c.degree}" for c in report.violations)
        raise ConsistencyError("THEOREM", f"implication violated: {names}",
                               defect=[c.to_json() for c in report.violations])
    log.info(f"{m.name}: {len(report.checks)} theorem checks, integrable={report.integrable}, b2+={report.b2_plus}")
    return report
