"""Bidegree projections, the split of d and the operator calJ."""
from math import comb
from typing import Dict, List, Tuple

from ..exact_algebra import ExactMatrix, I, ONE, i_power
from ..exterior import FormValue, GradedOperator, derivation
from ..shared.errors import ShapeMismatchError

Bidegree = Tuple[int, int]

# name -> (bidegree shift of the component)
D_COMPONENTS = {
    "mu": (2, -1),
    "del": (1, 0),
    "dbar": (0, 1),
    "mubar": (-1, 2),
}


def dual_j_action(manifold) -> GradedOperator:
    """Derivation extending (J alpha)(X) = -alpha(JX) from 1-forms.

    (1,0)-forms are its +i eigenvectors; on (p,q)-forms it acts by i(p-q).
    """
    n = manifold.dimension
    entries = manifold.acs.entries
    images = {}
    for jdx in range(1, n + 1):
        images[jdx] = FormValue(n, {(i,): -entries[jdx - 1][i - 1]
                                    for i in range(1, n + 1) if entries[jdx - 1][i - 1]})
    return derivation("J", n, images, shift=0, bidegree=(0, 0))


def bidegrees(manifold, k: int) -> List[Bidegree]:
    m = manifold.complex_dimension
    return [(p, k - p) for p in range(max(0, k - m), min(k, m) + 1)]


def projection_blocks(manifold, j_action: GradedOperator) -> Dict[int, Dict[Bidegree, ExactMatrix]]:
    """Pi^{p,q} on degree k by Lagrange interpolation in the J eigenvalues."""
    out = {}
    for k in range(manifold.dimension + 1):
        size = comb(manifold.dimension, k)
        block = j_action.block(k)
        identity = ExactMatrix.identity(size)
        types = bidegrees(manifold, k)
        out[k] = {}
        for p, q in types:
            s = p - q
            proj = identity
            for pp, qq in types:
                t = pp - qq
                if t == s:
                    continue
                factor = ONE / (I * (s - t))
                proj = (block - identity.scale(I * t)).scale(factor) @ proj
            out[k][(p, q)] = proj
    return out


def projection_operator(manifold, blocks: Dict[int, Dict[Bidegree, ExactMatrix]],
                        p: int, q: int) -> GradedOperator:
    m = manifold.complex_dimension
    if not (0 <= p <= m and 0 <= q <= m):
        raise ShapeMismatchError(f"bidegree ({p},{q}) outside 0..{m}")
    return GradedOperator(f"Pi^{p},{q}", manifold.dimension, {p + q: blocks[p + q][(p, q)]}, 1, 0, (0, 0))


def split_differential(manifold, d: GradedOperator,
                       blocks: Dict[int, Dict[Bidegree, ExactMatrix]]) -> Dict[str, GradedOperator]:
    """mu, del, dbar, mubar as Pi d Pi with the declared bidegree shifts."""
    n = manifold.dimension
    parts = {}
    for name, (a, b) in D_COMPONENTS.items():
        op_blocks = {}
        for k in range(n):
            total = None
            for (p, q), source in blocks[k].items():
                target = blocks[k + 1].get((p + a, q + b))
                if target is None:
                    continue
                piece = target @ d.block(k) @ source
                total = piece if total is None else total + piece
            if total is not None and not total.is_zero():
                op_blocks[k] = total
        parts[name] = GradedOperator(name, n, op_blocks, 1, 1, (a, b))
    return parts


def cal_j_operator(manifold, blocks: Dict[int, Dict[Bidegree, ExactMatrix]],
                   inverse: bool = False) -> GradedOperator:
    """calJ = sum i^{p-q} Pi^{p,q}; the inverse uses i^{q-p}."""
    out = {}
    for k, by_type in blocks.items():
        total = ExactMatrix.zeros(comb(manifold.dimension, k), comb(manifold.dimension, k))
        for (p, q), proj in by_type.items():
            total = total + proj.scale(i_power(q - p if inverse else p - q))
        out[k] = total
    return GradedOperator("calJ^-1" if inverse else "calJ", manifold.dimension, out, 1, 0, (0, 0))


def bidegree_parts(form: FormValue, blocks: Dict[int, Dict[Bidegree, ExactMatrix]]) -> Dict[Bidegree, FormValue]:
    """Split a form into its nonzero (p,q) components."""
    out = {}
    for k in form.degrees():
        vector = form.to_vector(k)
        for pq, proj in blocks[k].items():
            part = FormValue.from_vector(form.dimension, k, proj.apply(vector))
            if not part.is_zero():
                out[pq] = part
    return out


def is_pure(form: FormValue, blocks, p: int, q: int) -> bool:
    parts = bidegree_parts(form, blocks)
    return set(parts) <= {(p, q)}
