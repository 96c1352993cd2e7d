"""The Chevalley-Eilenberg differential on invariant forms."""
from ..exterior import FormValue, GradedOperator, derivation
from ..shared.errors import ValidationError
from .algebra import LieAlgebraData, validate_lie_algebra


def differential_of_generator(data: LieAlgebraData, k: int) -> FormValue:
    """d alpha_k = -sum_{i<j} c^k_ij alpha_i ^ alpha_j, from d alpha(X, Y) = -alpha([X, Y])."""
    n = data.dimension
    terms = {}
    for (i, j), bracket in data.brackets.items():
        for target, c in bracket:
            if target == k and c:
                terms[(i, j)] = terms.get((i, j), 0) - c
    return FormValue(n, terms)


def ce_differential(data: LieAlgebraData) -> GradedOperator:
    """Degree +1 derivation d with d^2 = 0; refuses algebras failing Jacobi."""
    report = validate_lie_algebra(data)
    if not report.passed:
        first = report.failures[0]
        raise ValidationError("JACOBI", f"Jacobi identity fails on triple {tuple(first['triple'])}",
                              witness=first)
    n = data.dimension
    images = {k: differential_of_generator(data, k) for k in range(1, n + 1)}
    return derivation("d", n, images, shift=1)
