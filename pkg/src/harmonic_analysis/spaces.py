"""Harmonic spaces and the span arithmetic the audits are built on.

Every space is a canonical RREF basis of an exact kernel inside the invariant
forms of one degree, optionally cut down to one bidegree.
"""
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence, Tuple, Union

from ..almost_kahler import AKManifold, bidegrees
from ..almost_kahler.stars import gram_adjoint
from ..exact_algebra import ExactMatrix, Vector, ZERO, column_space, span_rank
from ..exterior import FormValue, GradedOperator
from ..operator_calc import canonical_selection, laplacian_by_name
from ..shared.errors import ValidationError

Degree = Union[int, Tuple[int, int]]

# spaces cut out by several operators instead of one Laplacian
COMPOSITE_SPACES = {
    "d+dLambda": ("d", "dLambda", "(d dLambda)*"),
    "ddLambda": ("d dLambda", "d*", "dLambda*"),
    "primitive": ("Lambda",),
}


@dataclass(frozen=True)
class HarmonicSpace:
    operator: str
    dimension: int
    degree: int
    bidegree: Optional[Tuple[int, int]]
    basis: Tuple[Vector, ...]

    @property
    def size(self) -> int:
        return len(self.basis)

    @property
    def ambient(self) -> int:
        return comb(self.dimension, self.degree)

    @property
    def forms(self) -> List[FormValue]:
        return [FormValue.from_vector(self.dimension, self.degree, v) for v in self.basis]

    def label(self) -> str:
        where = f"{self.bidegree[0]},{self.bidegree[1]}" if self.bidegree else str(self.degree)
        return f"H^{where}_{self.operator}"

    def to_json(self):
        return {
            "operator": self.operator,
            "degree": self.degree,
            "bidegree": list(self.bidegree) if self.bidegree else None,
            "dimension": self.size,
            "basis": [f.to_json() for f in self.forms],
        }


def _composite_operators(m: AKManifold, selection: str) -> List[GradedOperator]:
    calc = m.calculus

    def d_dlambda() -> GradedOperator:
        return calc.memo("d dLambda", lambda: (calc.d @ calc.dLambda).relabel("d dLambda"))

    table = {
        "d": lambda: calc.d,
        "dLambda": lambda: calc.dLambda,
        "d dLambda": d_dlambda,
        "(d dLambda)*": lambda: calc.memo("adj:d dLambda",
                                          lambda: gram_adjoint(m.tower, d_dlambda(), "(d dLambda)*")),
        "d*": lambda: calc.adjoint("d"),
        "dLambda*": lambda: calc.adjoint("dLambda"),
        "Lambda": lambda: calc.Lambda,
    }
    return [table[name]() for name in COMPOSITE_SPACES[selection]]


def check_degree(m: AKManifold, degree: Degree) -> Tuple[int, Optional[Tuple[int, int]]]:
    if isinstance(degree, tuple):
        p, q = degree
        n = m.complex_dimension
        if not (0 <= p <= n and 0 <= q <= n):
            raise ValidationError("DEGREE", f"bidegree ({p},{q}) outside 0..{n}")
        return p + q, (p, q)
    if not 0 <= degree <= m.dimension:
        raise ValidationError("DEGREE", f"degree {degree} outside 0..{m.dimension}")
    return degree, None


def kernel_blocks(m: AKManifold, selection: str, k: int) -> List[ExactMatrix]:
    """Matrices on degree k whose common kernel is the selected space."""
    selection = canonical_selection(selection)
    if selection in COMPOSITE_SPACES:
        ops = _composite_operators(m, selection)
    else:
        ops = [laplacian_by_name(m, term) for term in selection.split(",") if term]
    return [op.block(k) for op in ops if 0 <= op.target(k) <= m.dimension]


def harmonic_space(m: AKManifold, selection: str, degree: Degree) -> HarmonicSpace:
    """ker of the selected Laplacian on degree k, or on bidegree (p, q).

    ``"dbar,mu"`` is the common kernel of Delta_dbar and Delta_mu; composite
    names (``d+dLambda``, ``ddLambda``, ``primitive``) use their defining
    operators directly.
    """
    k, bidegree = check_degree(m, degree)
    selection = canonical_selection(selection)
    blocks = kernel_blocks(m, selection, k)
    if bidegree is not None:
        size = comb(m.dimension, k)
        outside = ExactMatrix.identity(size) - m.calculus.projections[k][bidegree]
        blocks.append(outside)
    if blocks:
        basis = ExactMatrix.vstack(blocks).nullspace()
    else:
        basis = ExactMatrix.identity(comb(m.dimension, k)).columns()
    return HarmonicSpace(operator=selection, dimension=m.dimension, degree=k,
                         bidegree=bidegree, basis=tuple(basis))


def bigraded_sum(m: AKManifold, selection: str, k: int) -> List[Vector]:
    """Union of the bases of the selected space over all bidegrees of degree k."""
    out: List[Vector] = []
    for pq in bidegrees(m, k):
        out.extend(harmonic_space(m, selection, pq).basis)
    return out


# span arithmetic

def same_span(a: Sequence[Vector], b: Sequence[Vector], length: int) -> bool:
    rank_a, rank_b = span_rank(a, length), span_rank(b, length)
    return rank_a == rank_b == span_rank(list(a) + list(b), length)


def contains(big: Sequence[Vector], small: Sequence[Vector], length: int) -> bool:
    return span_rank(list(big) + list(small), length) == span_rank(big, length)


def intersection(a: Sequence[Vector], b: Sequence[Vector], length: int) -> List[Vector]:
    """Basis of span(a) cap span(b) from the kernel of [A | -B]."""
    if not a or not b:
        return []
    left = ExactMatrix.from_columns(list(a), length)
    stacked = ExactMatrix.hstack([left, -ExactMatrix.from_columns(list(b), length)])
    images = [left.apply(v[:len(a)]) for v in stacked.nullspace()]
    if not images:
        return []
    return column_space(ExactMatrix.from_columns(images, length))


def orthocomplement(m: AKManifold, k: int, basis: Sequence[Vector]) -> List[Vector]:
    """{x : <x, s> = 0 for every s in ``basis``}, inside degree k."""
    size = comb(m.dimension, k)
    if not basis:
        return ExactMatrix.identity(size).columns()
    gram = m.tower.gram(k)
    rows = ExactMatrix([[sum((a.conjugate() * b for a, b in zip(s, gram.column(j))), ZERO)
                         for j in range(size)] for s in basis], size)
    return rows.nullspace()


def orthogonal_projection(m: AKManifold, k: int, basis: Sequence[Vector], vector: Sequence) -> Vector:
    """Gram-orthogonal projection of ``vector`` onto span(``basis``)."""
    size = comb(m.dimension, k)
    if not basis:
        return tuple(ZERO for _ in range(size))
    s = ExactMatrix.from_columns(list(basis), size)
    gram = m.tower.gram(k)
    s_h_g = s.conjugate_transpose() @ gram
    normal = s_h_g @ s
    rhs = ExactMatrix.from_columns([s_h_g.apply(vector)])
    coeffs = normal.solve(rhs).column(0)
    return s.apply(coeffs)
