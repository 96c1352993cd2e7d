"""Public operations on a validated almost Kaehler manifold.

Every function reads from the manifold's cached calculus table, so repeated
calls are cheap.
"""
from typing import Dict, List, Tuple

from ..exterior import FormValue, GradedOperator
from ..shared.errors import ConsistencyError
from .nijenhuis import NijenhuisReport
from .stars import gram_adjoint
from .structure import AKManifold


def bigrade_projection(m: AKManifold, p: int, q: int) -> GradedOperator:
    return m.calculus.projection(p, q)


def split_d(m: AKManifold) -> Tuple[GradedOperator, GradedOperator, GradedOperator, GradedOperator]:
    """(mu, del, dbar, mubar); their sum is d."""
    c = m.calculus
    return c.mu, c.del_, c.dbar, c.mubar


def nijenhuis(m: AKManifold) -> NijenhuisReport:
    return m.calculus.nijenhuis


def hodge_star(m: AKManifold) -> GradedOperator:
    return m.calculus.star


def symplectic_star(m: AKManifold) -> GradedOperator:
    return m.calculus.star_s


def lefschetz_ops(m: AKManifold) -> Tuple[GradedOperator, GradedOperator, GradedOperator]:
    """(L, Lambda, H). Lambda is the Gram adjoint of L and must equal *^-1 L *."""
    c = m.calculus
    defect = c.Lambda.first_defect(c.Lambda_from_star)
    if defect is not None:
        raise ConsistencyError("LAMBDA", "Gram adjoint of L differs from *^-1 L *", defect=str(defect))
    return c.L, c.Lambda, c.H


def cal_J(m: AKManifold) -> GradedOperator:
    return m.calculus.calJ


def d_lambda_ops(m: AKManifold) -> Tuple[GradedOperator, GradedOperator]:
    """(d^Lambda, d^Lambda*), after checking that every construction agrees."""
    c = m.calculus
    checks = [
        ("dLambda", c.dLambda, c.dLambda_via_calJ),
        ("dLambda", c.dLambda, c.dLambda_via_star_s),
        ("dLambda*", c.dLambda_star, c.dLambda_star_via_calJ),
        ("dLambda*", c.dLambda_star, c.dLambda_star_via_commutator),
    ]
    for check, left, right in checks:
        defect = left.first_defect(right)
        if defect is not None:
            raise ConsistencyError(check, f"{left.label} != {right.label}", defect=str(defect))
    return c.dLambda, c.dLambda_star


def adjoint(m: AKManifold, op: GradedOperator) -> GradedOperator:
    return gram_adjoint(m.tower, op)


def lefschetz_decomposition(m: AKManifold) -> Dict[int, List[Dict]]:
    return m.calculus.lefschetz_decomposition


def primitive_space(m: AKManifold, k: int) -> List[FormValue]:
    lam = m.calculus.Lambda
    return [FormValue.from_vector(m.dimension, k, v) for v in lam.block(k).nullspace()]
