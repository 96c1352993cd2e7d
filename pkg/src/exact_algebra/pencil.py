"""Best constants for pairs of positive semidefinite quadratic forms."""
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from sympy import Poly, QQ, Rational, Symbol, interpolate

from .matrix import ExactMatrix, Vector, column_space
from .roots import INFINITY, RealAlgebraicRoot, isolate_real_roots
from .scalars import GaussianRational, ZERO
from ..shared.errors import NotPositiveSemidefiniteError


_C = Symbol("c")


def quadratic_form(m: ExactMatrix, gram: ExactMatrix, x: Sequence) -> GaussianRational:
    """<m x, x> = x^H G m x."""
    mx = m.apply(x)
    gmx = gram.apply(mx)
    total = ZERO
    for a, b in zip(x, gmx):
        if a and b:
            total = total + a.conjugate() * b
    return total


def restrict_form(m: ExactMatrix, gram: ExactMatrix, basis: ExactMatrix) -> ExactMatrix:
    """Hermitian matrix S^H G m S of the form <m x, x> on the span of S."""
    return basis.conjugate_transpose() @ (gram @ (m @ basis))


def ensure_positive_semidefinite(form: ExactMatrix, label: str,
                                 embed: Optional[ExactMatrix] = None) -> None:
    """Raise with a negative Rayleigh quotient witness unless ``form`` is PSD.

    Symmetric elimination by congruence; ``embed`` maps the coordinates of
    ``form`` back to ambient vectors for the reported witness.
    """
    if form != form.conjugate_transpose():
        raise NotPositiveSemidefiniteError(f"{label} is not self-adjoint")
    n = form.rows
    w = form.tolist()
    t = ExactMatrix.identity(n).tolist()

    def fail(coords: List[GaussianRational]):
        value = quadratic_form(form, ExactMatrix.identity(n), coords)
        witness = list(embed.apply(coords)) if embed is not None else coords
        raise NotPositiveSemidefiniteError(
            f"{label} is not positive semidefinite (Rayleigh value {value})",
            witness=witness, value=value,
        )

    for i in range(n):
        d = w[i][i]
        if d.re < 0:
            fail([t[k][i] for k in range(n)])
        if not d:
            j = next((j for j in range(i + 1, n) if w[i][j]), None)
            if j is None:
                continue
            s = (-(w[j][j] + 1) / (2 * w[i][j])).conjugate()
            fail([s * t[k][i] + t[k][j] for k in range(n)])
        for j in range(i + 1, n):
            if not w[i][j]:
                continue
            s = w[i][j] / d
            s_bar = s.conjugate()
            for k in range(n):
                if w[k][i]:
                    w[k][j] = w[k][j] - s * w[k][i]
            for k in range(n):
                if w[i][k]:
                    w[j][k] = w[j][k] - s_bar * w[i][k]
            for k in range(n):
                if t[k][i]:
                    t[k][j] = t[k][j] - s * t[k][i]


def pencil_min_finite_eigenvalue(
    a: ExactMatrix,
    b: ExactMatrix,
    subspace: Sequence[Vector],
    gram: Optional[ExactMatrix] = None,
    width: Fraction = Fraction(1, 10 ** 30),
) -> Union[RealAlgebraicRoot, type(INFINITY)]:
    """sup{c : <A x, x> >= c <B x, x> for all x in span(subspace)}.

    Directions killed by both forms are dropped first, which leaves a regular
    pencil; its smallest finite generalized eigenvalue is the answer. The
    result is INFINITY when B vanishes on the subspace.
    """
    if gram is None:
        gram = ExactMatrix.identity(a.rows)
    if not subspace:
        return INFINITY
    s = ExactMatrix.from_columns(list(subspace))
    a_hat = restrict_form(a, gram, s)
    b_hat = restrict_form(b, gram, s)
    ensure_positive_semidefinite(a_hat, "A", embed=s)
    ensure_positive_semidefinite(b_hat, "B", embed=s)
    if b_hat.is_zero():
        return INFINITY

    complement = column_space(a_hat + b_hat)
    t = ExactMatrix.from_columns(complement)
    a_reg = t.conjugate_transpose() @ a_hat @ t
    b_reg = t.conjugate_transpose() @ b_hat @ t

    points = []
    for c in range(a_reg.rows + 1):
        det = (a_reg - b_reg.scale(c)).determinant()
        if det.im != 0:
            raise NotPositiveSemidefiniteError("pencil determinant is not real")
        points.append((c, Rational(det.re.numerator, det.re.denominator)))
    poly = Poly(interpolate(points, _C), _C, domain=QQ)
    coeffs = [Fraction(int(x.p), int(x.q)) for x in poly.all_coeffs()]
    if len(coeffs) <= 1:
        return INFINITY
    roots = isolate_real_roots(coeffs, width)
    return roots[0] if roots else INFINITY
