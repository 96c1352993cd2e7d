"""Hodge and symplectic stars and Gram adjoints."""
from math import comb
from typing import Callable

from ..exact_algebra import ExactMatrix, GaussianRational, ZERO
from ..exterior import GradedOperator, GramTower, basis, basis_index, complement, compound_gram, sort_with_sign


def _star_from_pairing(dimension: int, pairing: Callable[[int], ExactMatrix],
                       top: GaussianRational, label: str) -> GradedOperator:
    """Star defined by e_I ^ star(e_J) = pairing_k[I][J] * volume.

    With volume = top * e_1^...^e_n the only surviving column entry of
    star(e_J) against e_I sits at complement(I).
    """
    blocks = {}
    for k in range(dimension + 1):
        source = basis(dimension, k)
        target_index = basis_index(dimension, dimension - k)
        grams = pairing(k)
        rows = [[ZERO] * len(source) for _ in range(comb(dimension, dimension - k))]
        for a, mono in enumerate(source):
            comp = complement(dimension, mono)
            sign, _ = sort_with_sign(tuple(mono) + tuple(comp))
            row = rows[target_index[comp]]
            for b in range(len(source)):
                entry = grams[a, b]
                if entry:
                    row[b] = top * entry * sign
        blocks[k] = ExactMatrix(rows, len(source))
    return GradedOperator(label, dimension, blocks, -1, dimension)


def hodge_star_operator(tower: GramTower, top: GaussianRational) -> GradedOperator:
    """alpha ^ star(conj beta) = <alpha, beta> vol, complex linear."""
    return _star_from_pairing(tower.dimension, tower.gram, top, "*")


def symplectic_star_operator(poisson: ExactMatrix, top: GaussianRational) -> GradedOperator:
    """alpha ^ star_s(beta) = pi^k(alpha, beta) vol for the bivector pi = Omega^-1."""
    dimension = poisson.rows
    cache = {}

    def pairing(k):
        if k not in cache:
            cache[k] = compound_gram(poisson, k)
        return cache[k]

    return _star_from_pairing(dimension, pairing, top, "*s")


def inverse_reflection(op: GradedOperator, label: str) -> GradedOperator:
    """Inverse of an operator sending degree k to n - k, block by block."""
    n = op.dimension
    blocks = {n - k: op.block(k).inverse() for k in range(n + 1)}
    return GradedOperator(label, n, blocks, -1, n)


def gram_adjoint(tower: GramTower, op: GradedOperator, label: str = None) -> GradedOperator:
    """T* = G_k^-1 T^H G_t for each block T from degree k to degree t."""
    blocks = {}
    for k, block in op.blocks.items():
        t = op.target(k)
        blocks[t] = tower.inverse(k) @ block.conjugate_transpose() @ tower.gram(t)
    if op.sign == 1:
        sign, offset = 1, -op.offset
    else:
        sign, offset = op.sign, op.offset
    bidegree = None if op.bidegree is None else (-op.bidegree[0], -op.bidegree[1])
    return GradedOperator(label or f"{op.label}*", op.dimension, blocks, sign, offset, bidegree)


def star_conjugate(star: GradedOperator, partner: GradedOperator, label: str = None) -> GradedOperator:
    """-* partner *, the star formula for the adjoint of the conjugate partner."""
    composed = star @ partner @ star
    return GradedOperator(label or f"-*{partner.label}*", composed.dimension,
                          (-composed).blocks, composed.sign, composed.offset,
                          None if partner.bidegree is None else (-partner.bidegree[1], -partner.bidegree[0]))
