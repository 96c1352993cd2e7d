"""Nijenhuis tensor of J and the derivation it induces on forms."""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from ..exact_algebra import GaussianRational, rational_to_string
from ..exterior import FormValue, GradedOperator, derivation


def nijenhuis_vector(manifold, x: List[Fraction], y: List[Fraction]) -> List[Fraction]:
    """N(X,Y) = [X,Y] + J[X,JY] + J[JX,Y] - [JX,JY]."""
    bracket = manifold.algebra.bracket
    j = manifold.acs.apply
    jx, jy = j(x), j(y)
    first = bracket(x, y)
    second = j(bracket(x, jy))
    third = j(bracket(jx, y))
    fourth = bracket(jx, jy)
    return [a + b + c - e for a, b, c, e in zip(first, second, third, fourth)]


def _unit(n: int, i: int) -> List[Fraction]:
    v = [Fraction(0)] * n
    v[i - 1] = Fraction(1)
    return v


def nijenhuis_table(manifold) -> Dict[Tuple[int, int], List[Fraction]]:
    """N(xi_i, xi_j) for i < j."""
    n = manifold.dimension
    return {(i, j): nijenhuis_vector(manifold, _unit(n, i), _unit(n, j))
            for i, j in combinations(range(1, n + 1), 2)}


def nijenhuis_derivation(manifold, table: Dict[Tuple[int, int], List[Fraction]]) -> GradedOperator:
    """(N* alpha)(X, Y) = alpha(N(X, Y)) on 1-forms, extended as a derivation."""
    n = manifold.dimension
    images = {}
    for l in range(1, n + 1):
        images[l] = FormValue(n, {(i, j): vec[l - 1] for (i, j), vec in table.items() if vec[l - 1]})
    return derivation("N*", n, images, shift=1, bidegree=None)


@dataclass
class NijenhuisReport:
    table: Dict[Tuple[int, int], List[Fraction]]
    derivation: GradedOperator
    factor: Optional[GaussianRational]
    factor_consistent: bool
    integrable: bool
    mu_vanishes: bool
    mubar_vanishes: bool

    @property
    def detectors_agree(self) -> bool:
        return self.integrable == self.mu_vanishes == self.mubar_vanishes

    def nonzero_values(self) -> List[Dict]:
        return [{"pair": [i, j], "value": [rational_to_string(x) for x in vec]}
                for (i, j), vec in self.table.items() if any(vec)]

    def to_json(self) -> Dict:
        return {
            "integrable": self.integrable,
            "mu_vanishes": self.mu_vanishes,
            "mubar_vanishes": self.mubar_vanishes,
            "detectors_agree": self.detectors_agree,
            "factor": None if self.factor is None else str(self.factor),
            "factor_consistent": self.factor_consistent,
            "values": self.nonzero_values(),
        }


def measure_factor(mu_plus_mubar: GradedOperator, n_star: GradedOperator) -> Tuple[Optional[GaussianRational], bool]:
    """kappa with mu + mubar = kappa * N*, read off the first nonzero entry and checked everywhere."""
    if n_star.is_zero():
        return None, mu_plus_mubar.is_zero()
    kappa = None
    for k in n_star.sources():
        block = n_star.block(k)
        for r in range(block.rows):
            for c in range(block.cols):
                if block[r, c]:
                    kappa = mu_plus_mubar.block(k)[r, c] / block[r, c]
                    break
            if kappa is not None:
                break
        if kappa is not None:
            break
    return kappa, mu_plus_mubar == n_star.scale(kappa)
