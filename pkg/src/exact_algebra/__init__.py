"""Exact scalar and linear-algebra substrate."""
from .scalars import GaussianRational, I, ONE, ZERO, gauss, i_power, parse_rational, rational_to_string
from .matrix import ExactMatrix, Vector, char_poly, column_space, nullspace, span_rank
from .roots import INFINITY, RealAlgebraicRoot, isolate_real_roots, real_coefficients, smallest_positive
from .pencil import ensure_positive_semidefinite, pencil_min_finite_eigenvalue, quadratic_form

__all__ = [
    'GaussianRational', 'I', 'ONE', 'ZERO', 'gauss', 'i_power', 'parse_rational', 'rational_to_string',
    'ExactMatrix', 'Vector', 'char_poly', 'column_space', 'nullspace', 'span_rank',
    'INFINITY', 'RealAlgebraicRoot', 'isolate_real_roots', 'real_coefficients', 'smallest_positive',
    'ensure_positive_semidefinite', 'pencil_min_finite_eigenvalue', 'quadratic_form',
]
