"""Hermitian products on forms induced by a Gram matrix of 1-forms."""
from functools import lru_cache
from typing import Dict

from ..exact_algebra import ExactMatrix, GaussianRational, ZERO
from .forms import FormValue, basis


def compound_gram(gram1: ExactMatrix, k: int) -> ExactMatrix:
    """k-th compound: entry (I, J) is det of the I x J block of ``gram1``."""
    n = gram1.rows
    monomials = basis(n, k)
    if k == 0:
        return ExactMatrix.identity(1)
    rows = []
    for mi in monomials:
        row = []
        for mj in monomials:
            block = ExactMatrix([[gram1[i - 1, j - 1] for j in mj] for i in mi])
            row.append(block.determinant())
        rows.append(row)
    return ExactMatrix(rows, len(monomials))


class GramTower:
    """Compound Gram matrices of every degree with cached inverses."""

    def __init__(self, gram1: ExactMatrix):
        self.gram1 = gram1
        self.dimension = gram1.rows
        self._grams: Dict[int, ExactMatrix] = {}
        self._inverses: Dict[int, ExactMatrix] = {}

    def gram(self, k: int) -> ExactMatrix:
        if k not in self._grams:
            self._grams[k] = compound_gram(self.gram1, k)
        return self._grams[k]

    def inverse(self, k: int) -> ExactMatrix:
        if k not in self._inverses:
            self._inverses[k] = self.gram(k).inverse()
        return self._inverses[k]

    def inner(self, a: FormValue, b: FormValue) -> GaussianRational:
        total = ZERO
        for k in sorted(set(a.degrees()) & set(b.degrees())):
            va, vb = a.to_vector(k), b.to_vector(k)
            gva = self.gram(k).apply(va)
            for x, y in zip(vb, gva):
                if x and y:
                    total = total + x.conjugate() * y
        return total

    def norm2(self, a: FormValue):
        """||a||^2 as an exact rational."""
        return self.inner(a, a).re


@lru_cache(maxsize=64)
def _tower_for(key) -> GramTower:
    rows = [list(r) for r in key]
    return GramTower(ExactMatrix(rows))


def inner_product(a: FormValue, b: FormValue, gram1: ExactMatrix) -> GaussianRational:
    """<a, b>, conjugate-linear in ``b``; mixed degrees pair to zero."""
    key = tuple(tuple(gram1.row(i)) for i in range(gram1.rows))
    return _tower_for(key).inner(a, b)
