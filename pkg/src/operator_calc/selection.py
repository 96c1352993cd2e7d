"""Operators and Laplacians selected by name.

A selection such as ``"dbar+mu"`` names the Laplacian of the sum
dbar + mu; ``"dbar,mu"`` names the sum of Laplacians Delta_dbar + Delta_mu.
"""
from typing import List

from ..almost_kahler import AKManifold
from ..exterior import GradedOperator
from ..shared.errors import ValidationError
from .commutators import laplacian

# CLI spellings that differ from the canonical selection
ALIASES = {
    "dbar-mu": "dbar+mu",
    "del-mubar": "del+mubar",
}

BASIC_OPERATORS = ("d", "mu", "del", "dbar", "mubar", "dLambda")


def canonical_selection(selection: str) -> str:
    selection = selection.replace(" ", "")
    return ALIASES.get(selection, selection)


def operator_by_name(m: AKManifold, expression: str) -> GradedOperator:
    """Sum of named operators, e.g. ``dbar+mu`` or ``d*``."""
    calc = m.calculus
    terms = [t for t in expression.split("+") if t]
    if not terms:
        raise ValidationError("OPERATOR", "empty operator expression")
    try:
        ops = [calc.op(t) for t in terms]
    except KeyError as e:
        raise ValidationError("OPERATOR", f"unknown operator in {expression!r}: {e}")
    total = ops[0]
    for op in ops[1:]:
        total = total + op
    return total.relabel(expression)


def laplacian_terms(selection: str) -> List[str]:
    return [t for t in canonical_selection(selection).split(",") if t]


def laplacian_by_name(m: AKManifold, selection: str) -> GradedOperator:
    """Delta of a selection, built once per manifold."""
    selection = canonical_selection(selection)
    terms = laplacian_terms(selection)
    if not terms:
        raise ValidationError("OPERATOR", "empty Laplacian selection")

    def build() -> GradedOperator:
        parts = [laplacian(m, operator_by_name(m, t), f"Delta_{t}") for t in terms]
        total = parts[0]
        for part in parts[1:]:
            total = total + part
        return total.relabel(" + ".join(p.label for p in parts), (0, 0))

    return m.calculus.memo(f"lap:{selection}", build)
