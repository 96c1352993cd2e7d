"""Lefschetz operators, primitive forms and the Lefschetz decomposition."""
from math import comb
from typing import Dict, List

from ..exact_algebra import ExactMatrix, Vector
from ..exterior import GradedOperator, multiplication


def lefschetz_operator(manifold) -> GradedOperator:
    return multiplication("L", manifold.omega, bidegree=(1, 1))


def counting_operator(manifold) -> GradedOperator:
    """H = sum (n - k) Pi^k with n the complex dimension."""
    n = manifold.complex_dimension
    dim = manifold.dimension
    blocks = {k: ExactMatrix.identity(comb(dim, k)).scale(n - k) for k in range(dim + 1) if n != k}
    return GradedOperator("H", dim, blocks, 1, 0, (0, 0))


def primitive_basis(lam: GradedOperator, k: int) -> List[Vector]:
    """Canonical basis of ker Lambda in degree k."""
    return lam.block(k).nullspace()


def lefschetz_decomposition(manifold, lefschetz: GradedOperator, lam: GradedOperator) -> Dict[int, List[Dict]]:
    """dim L^r P^{k-2r} for every degree k; pieces sum to dim of degree k."""
    dim = manifold.dimension
    n = manifold.complex_dimension
    primitive = {j: primitive_basis(lam, j) for j in range(n + 1)}
    out = {}
    for k in range(dim + 1):
        pieces = []
        for r in range(k // 2 + 1):
            j = k - 2 * r
            if j > n or not primitive[j]:
                continue
            power = lefschetz.power(r)
            block = power.block(j)
            images = [block.apply(v) for v in primitive[j]]
            rank = ExactMatrix.from_columns(images, comb(dim, k)).rank()
            if rank:
                pieces.append({"r": r, "primitive_degree": j, "dimension": rank})
        out[k] = pieces
    return out
