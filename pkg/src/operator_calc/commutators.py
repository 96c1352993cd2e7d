"""Graded commutators and Laplacians of structure operators."""
from math import comb
from typing import List

from ..almost_kahler import AKManifold
from ..almost_kahler.stars import gram_adjoint
from ..exact_algebra import ExactMatrix
from ..exterior import GradedOperator
from ..shared.errors import ShapeMismatchError


def graded_commutator(a: GradedOperator, b: GradedOperator, label: str = None) -> GradedOperator:
    """[a, b] = ab - (-1)^(|a||b|) ba, with |x| the degree shift of x."""
    if a.dimension != b.dimension:
        raise ShapeMismatchError(f"{a.label} and {b.label} act on different dimensions")
    sign = -1 if a.parity * b.parity else 1
    ab, ba = a @ b, b @ a
    result = ab + ba if sign == -1 else ab - ba
    bidegree = ab.bidegree if ab.bidegree == ba.bidegree else None
    return result.relabel(label or f"[{a.label},{b.label}]", bidegree)


def laplacian(m: AKManifold, op: GradedOperator, label: str = None) -> GradedOperator:
    """op op* + op* op against the Gram products of ``m``."""
    star = gram_adjoint(m.tower, op)
    return (op @ star + star @ op).relabel(label or f"Delta_{op.label}", (0, 0))


def joint_kernel(m: AKManifold, ops: List[GradedOperator], k: int) -> List:
    """Canonical basis of the common kernel of ``ops`` on degree k."""
    blocks = [op.block(k) for op in ops if 0 <= op.target(k) <= m.dimension]
    if not blocks:
        return ExactMatrix.identity(comb(m.dimension, k)).columns()
    return ExactMatrix.vstack(blocks).nullspace()
