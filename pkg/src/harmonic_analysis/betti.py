"""Invariant Betti numbers and Hodge numbers h^{p,q}."""
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Tuple

from ..almost_kahler import AKManifold, bidegrees
from ..shared.errors import ConsistencyError
from ..shared.logger import log
from .spaces import harmonic_space, same_span


@dataclass
class HodgeNumbers:
    betti: List[int]
    hodge: Dict[Tuple[int, int], int]
    label: str
    harmonic_dimensions: List[int] = field(default_factory=list)

    def bigraded_total(self, k: int) -> int:
        return sum(h for (p, q), h in self.hodge.items() if p + q == k)

    def to_json(self) -> Dict:
        return {
            "label": self.label,
            "b": self.betti,
            "h": {f"{p},{q}": h for (p, q), h in sorted(self.hodge.items())},
        }


def invariant_betti_numbers(m: AKManifold) -> List[int]:
    """dim ker d - rank d in every degree of the Chevalley-Eilenberg complex."""
    d = m.calculus.d
    out = []
    for k in range(m.dimension + 1):
        closed = comb(m.dimension, k) - d.block(k).rank() if k < m.dimension else 1
        exact = d.block(k - 1).rank() if k > 0 else 0
        out.append(closed - exact)
    return out


def check_bidegree_equalities(m: AKManifold, pq: Tuple[int, int]) -> int:
    """H^{p,q}_d = H_dbar cap H_mu = H_del cap H_mubar; returns the dimension."""
    size = comb(m.dimension, sum(pq))
    d_space = harmonic_space(m, "d", pq).basis
    for selection in ("dbar,mu", "del,mubar"):
        other = harmonic_space(m, selection, pq).basis
        if not same_span(d_space, other, size):
            raise ConsistencyError("HODGE_NUMBERS", f"H^{pq}_d differs from the {selection} harmonic space",
                                   defect={"d": len(d_space), selection: len(other)})
    return len(d_space)


def hodge_betti_numbers(m: AKManifold) -> HodgeNumbers:
    """Betti and Hodge numbers with their symmetries checked.

    Raises ``ConsistencyError`` when a diamond symmetry, the bound
    sum h^{p,q} <= b^k, or the parity of odd-degree sums fails.
    """
    n = m.complex_dimension
    betti = invariant_betti_numbers(m)
    hodge = {}
    for k in range(m.dimension + 1):
        for pq in bidegrees(m, k):
            hodge[pq] = check_bidegree_equalities(m, pq)

    for (p, q), h in hodge.items():
        if h != hodge[(q, p)] or h != hodge[(n - p, n - q)]:
            raise ConsistencyError("HODGE_DIAMOND", f"h^{p},{q} = {h} breaks the diamond symmetries",
                                   defect={"conjugate": hodge[(q, p)], "dual": hodge[(n - p, n - q)]})

    label = "Betti numbers" if m.nomizu else "invariant Betti numbers"
    numbers = HodgeNumbers(betti=betti, hodge=hodge, label=label)
    for k in range(m.dimension + 1):
        total = numbers.bigraded_total(k)
        if total > betti[k]:
            raise ConsistencyError("HODGE_BOUND", f"sum of h^p,q in degree {k} is {total} > b^{k} = {betti[k]}")
        if k % 2 and total % 2:
            raise ConsistencyError("HODGE_PARITY", f"sum of h^p,q in odd degree {k} is odd ({total})")
        numbers.harmonic_dimensions.append(harmonic_space(m, "d", k).size)

    if numbers.harmonic_dimensions != betti:
        raise ConsistencyError("HODGE_THEOREM", "dim ker Delta_d differs from the Betti numbers",
                               defect={"harmonic": numbers.harmonic_dimensions, "betti": betti})
    log.debug(f"{m.name}: b = {betti}, h = {numbers.to_json()['h']}")
    return numbers
