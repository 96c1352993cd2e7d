"""Smallest positive eigenvalues of Laplacians and the size of mu."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from ..almost_kahler import AKManifold
from ..exact_algebra import RealAlgebraicRoot, isolate_real_roots, rational_to_string, smallest_positive
from ..operator_calc import is_self_adjoint, laplacian_by_name
from ..shared.config import get_config
from ..shared.errors import ValidationError
from ..shared.logger import log
from .spaces import check_degree

QUARTER_SQUARED = Fraction(1, 16)


def laplacian_roots(m: AKManifold, selection: str, k: int, width: Fraction = None):
    """Certified real eigenvalues of the selected Laplacian on degree k."""
    check_degree(m, k)
    width = width or get_config().precision.width
    lap = laplacian_by_name(m, selection)
    if not is_self_adjoint(m, lap, k):
        raise ValidationError("SELF_ADJOINT", f"{lap.label} is not self-adjoint on degree {k}")
    return isolate_real_roots(lap.block(k).char_poly(), width)


def spectral_gap(m: AKManifold, selection: str, k: int, width: Fraction = None) -> Optional[RealAlgebraicRoot]:
    """Smallest positive eigenvalue lambda_k, or None when Delta vanishes on degree k."""
    gap = smallest_positive(laplacian_roots(m, selection, k, width))
    log.debug(f"{m.name}: gap of Delta_{selection} on degree {k}: {gap.as_string() if gap else None}")
    return gap


@dataclass
class MuNorms:
    """Three readings of "the size of mu" on invariant forms."""

    operator_norm2: RealAlgebraicRoot
    coefficient_max2: Fraction
    real_coefficient_max2: Fraction

    @property
    def quarter(self) -> Dict[str, bool]:
        """Which reading equals 1/4 (compared squared)."""
        return {
            "operator_norm": self.operator_norm2.compare(QUARTER_SQUARED) == 0,
            "coefficient": self.coefficient_max2 == QUARTER_SQUARED,
            "real_coefficient": self.real_coefficient_max2 == QUARTER_SQUARED,
        }

    def to_json(self) -> Dict:
        return {
            "operator_norm2": self.operator_norm2.as_string(),
            "coefficient_max2": rational_to_string(self.coefficient_max2),
            "real_coefficient_max2": rational_to_string(self.real_coefficient_max2),
            "equals_quarter": self.quarter,
        }


def _max_coefficient2(op) -> Fraction:
    best = Fraction(0)
    for block in op.blocks.values():
        for row in block.tolist():
            for z in row:
                best = max(best, z.norm2())
    return best


def mu_norms(m: AKManifold, width: Fraction = None) -> MuNorms:
    """Operator norm^2 of mu on 1-forms and the largest |coefficient|^2 of mu and mu + mubar."""
    width = width or get_config().precision.width
    calc = m.calculus
    mu_star_mu = calc.adjoint("mu") @ calc.mu
    roots = isolate_real_roots(mu_star_mu.block(1).char_poly(), width)
    top = roots[-1] if roots else RealAlgebraicRoot.exact(Fraction(0))
    return MuNorms(
        operator_norm2=top,
        coefficient_max2=_max_coefficient2(calc.mu),
        real_coefficient_max2=_max_coefficient2(calc.mu + calc.mubar),
    )
