"""Norm identities for d^Lambda on d-harmonic forms.

For h in H^k_d with 0 < k <= n:

    |d^L h|^2 + |d^L* h|^2 = 4 Re <J^-1 (mu + mubar) J h, d^L* h>
                             + 4 Re <J^-1 (mu* + mubar*) J h, d^L h>

and for 1-forms |d^L* h|^2 = 8 (|mu h^{0,1}|^2 + |mubar h^{1,0}|^2).
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..almost_kahler import AKManifold
from ..exact_algebra import rational_to_string
from ..exterior import FormValue
from ..shared.errors import ConsistencyError
from ..shared.logger import log
from .spaces import harmonic_space

Sides = Tuple[Fraction, Fraction]


@dataclass
class NormCheck:
    form: FormValue
    identity: Sides
    one_form: Optional[Sides] = None

    @property
    def exact(self) -> bool:
        return self.identity[0] == self.identity[1] and (self.one_form is None or self.one_form[0] == self.one_form[1])

    def to_json(self) -> Dict:
        def sides(pair):
            return None if pair is None else [rational_to_string(pair[0]), rational_to_string(pair[1])]
        return {"form": self.form.to_json(), "identity": sides(self.identity), "one_form": sides(self.one_form)}


@dataclass
class DLambdaNormReport:
    degree: int
    checks: List[NormCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.exact for c in self.checks)

    def to_json(self) -> Dict:
        return {"degree": self.degree, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def dlambda_norm_audit(m: AKManifold, k: int) -> DLambdaNormReport:
    """Evaluate both identities on every basis form of H^k_d; any defect raises."""
    n = m.complex_dimension
    if not 0 < k <= n:
        return DLambdaNormReport(degree=k)
    calc = m.calculus
    mu_sum = calc.mu + calc.mubar
    mu_sum_star = calc.adjoint("mu") + calc.adjoint("mubar")
    report = DLambdaNormReport(degree=k)
    for h in harmonic_space(m, "d", k).forms:
        dl, dl_star = calc.dLambda(h), calc.dLambda_star(h)
        jh = calc.calJ(h)
        lhs = m.norm2(dl) + m.norm2(dl_star)
        rhs = 4 * m.inner(calc.calJ_inv(mu_sum(jh)), dl_star).re + 4 * m.inner(calc.calJ_inv(mu_sum_star(jh)), dl).re
        check = NormCheck(form=h, identity=(lhs, rhs))
        if k == 1:
            h10, h01 = calc.projection(1, 0)(h), calc.projection(0, 1)(h)
            check.one_form = (m.norm2(dl_star), 8 * (m.norm2(calc.mu(h01)) + m.norm2(calc.mubar(h10))))
        if not check.exact:
            raise ConsistencyError("DLAMBDA_NORMS", f"norm identity fails on {h!r} in degree {k}",
                                   defect=check.to_json())
        report.checks.append(check)
    log.debug(f"{m.name}: d^Lambda norm identities hold on {len(report.checks)} harmonic {k}-forms")
    return report
