"""Exterior algebra: monomials, forms, Gram products and graded operators."""
from .forms import FormValue, IndexMonomial, basis, basis_index, complement, sort_with_sign, wedge, wedge_power
from .inner import GramTower, compound_gram, inner_product
from .operators import (
    GradedOperator,
    degree_projection,
    derivation,
    from_form_map,
    identity_operator,
    multiplication,
    zero_operator,
)

__all__ = [
    'FormValue', 'IndexMonomial', 'basis', 'basis_index', 'complement', 'sort_with_sign', 'wedge', 'wedge_power',
    'GramTower', 'compound_gram', 'inner_product',
    'GradedOperator', 'degree_projection', 'derivation', 'from_form_map', 'identity_operator',
    'multiplication', 'zero_operator',
]
