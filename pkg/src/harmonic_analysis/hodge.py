"""Hodge decomposition of harmonic forms and pure-and-full cohomology."""
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional

from ..almost_kahler import AKManifold, bidegrees
from ..exact_algebra import ExactMatrix, column_space, span_rank
from ..exterior import FormValue
from ..shared.errors import ConsistencyError
from ..shared.logger import log
from .spaces import bigraded_sum, contains, harmonic_space, orthocomplement, same_span


@dataclass
class DecompositionVerdict:
    degree: int
    holds: bool
    harmonic_dimension: int
    bigraded_dimension: int
    witness: Optional[FormValue] = None

    def to_json(self) -> Dict:
        return {
            "degree": self.degree,
            "holds": self.holds,
            "harmonic_dimension": self.harmonic_dimension,
            "bigraded_dimension": self.bigraded_dimension,
            "witness": self.witness.to_json() if self.witness is not None else None,
        }


@dataclass
class PureFullVerdict:
    degree: int
    pure: bool
    full: bool
    type_dimensions: Dict[str, int]
    de_rham_dimension: int
    decomposition_holds: bool

    @property
    def pure_and_full(self) -> bool:
        return self.pure and self.full

    def to_json(self) -> Dict:
        return {
            "degree": self.degree,
            "pure": self.pure,
            "full": self.full,
            "type_dimensions": self.type_dimensions,
            "de_rham_dimension": self.de_rham_dimension,
            "decomposition_holds": self.decomposition_holds,
        }


def hodge_decomposition_check(m: AKManifold, k: int) -> DecompositionVerdict:
    """Does H^k_d equal the sum of the H^{p,q}_d with p + q = k?

    A failing degree comes with a harmonic witness orthogonal to the
    bigraded sum. The intersection of the d, mu and mubar harmonic spaces
    must equal that sum, and an odd Betti number rules the decomposition out.
    """
    size = comb(m.dimension, k)
    harmonic = harmonic_space(m, "d", k).basis
    bigraded = bigraded_sum(m, "d", k)
    bigraded_dim = span_rank(bigraded, size)

    triple = harmonic_space(m, "d,mu,mubar", k).basis
    if not same_span(triple, bigraded, size):
        raise ConsistencyError("DECOMPOSITION", f"H_d cap H_mu cap H_mubar differs from the bigraded sum in degree {k}",
                               defect={"intersection": len(triple), "bigraded": bigraded_dim})
    if not contains(harmonic, bigraded, size):
        raise ConsistencyError("DECOMPOSITION", f"a harmonic (p,q)-form of degree {k} is not d-harmonic")

    holds = bigraded_dim == len(harmonic)
    witness = None
    if not holds:
        # harmonic forms orthogonal to the bigraded sum
        normal = orthocomplement(m, k, bigraded)
        shared = ExactMatrix.hstack([ExactMatrix.from_columns(list(harmonic), size),
                                     -ExactMatrix.from_columns(normal, size)])
        coeffs = shared.nullspace()[0][:len(harmonic)]
        witness = FormValue.from_vector(m.dimension, k, ExactMatrix.from_columns(list(harmonic), size).apply(coeffs))
    if holds and len(harmonic) % 2 and k % 2:
        raise ConsistencyError("DECOMPOSITION", f"b^{k} is odd yet H^{k}_d decomposes")
    log.debug(f"{m.name}: Hodge decomposition in degree {k}: {holds} ({bigraded_dim}/{len(harmonic)})")
    return DecompositionVerdict(degree=k, holds=holds, harmonic_dimension=len(harmonic),
                                bigraded_dimension=bigraded_dim, witness=witness)


def _closed_of_type(m: AKManifold, k: int, pq) -> List:
    """Closed forms of pure type (p, q)."""
    size = comb(m.dimension, k)
    blocks = [ExactMatrix.identity(size) - m.calculus.projections[k][pq]]
    if k < m.dimension:
        blocks.append(m.calculus.d.block(k))
    return ExactMatrix.vstack(blocks).nullspace()


def pure_full_check(m: AKManifold, k: int) -> PureFullVerdict:
    """Compare the subgroups H^{p,q} of invariant cohomology with H^k.

    H^{p,q} is the image of the closed (p,q)-forms modulo invariant exact
    forms. Pure means the sum of these images is direct, full means it is
    all of H^k. A Hodge decomposition of H^k_d forces both.
    """
    size = comb(m.dimension, k)
    exact = column_space(m.calculus.d.block(k - 1)) if k > 0 else []
    exact_rank = span_rank(exact, size)
    type_dims = {}
    all_closed: List = []
    for pq in bidegrees(m, k):
        closed = _closed_of_type(m, k, pq)
        all_closed.extend(closed)
        type_dims[f"{pq[0]},{pq[1]}"] = span_rank(list(closed) + list(exact), size) - exact_rank
    summed = span_rank(all_closed + list(exact), size) - exact_rank
    de_rham = harmonic_space(m, "d", k).size
    pure = summed == sum(type_dims.values())
    full = summed == de_rham
    decomposition = hodge_decomposition_check(m, k).holds
    if decomposition and not (pure and full):
        raise ConsistencyError("PURE_FULL", f"H^{k}_d decomposes but cohomology is not pure and full in degree {k}",
                               defect={"pure": pure, "full": full})
    return PureFullVerdict(degree=k, pure=pure, full=full, type_dimensions=type_dims,
                           de_rham_dimension=de_rham, decomposition_holds=decomposition)
