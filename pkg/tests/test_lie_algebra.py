import random
from fractions import Fraction

import pytest

from src.exterior import FormValue, basis
from src.lie_algebra import LieAlgebraData, ce_differential, differential_of_generator, validate_lie_algebra
from src.shared.errors import ValidationError

KODAIRA_THURSTON = LieAlgebraData.from_terms(4, {(1, 4): [(2, 1)]})
HEISENBERG = LieAlgebraData.from_terms(3, {(1, 2): [(3, 1)]})
NOT_JACOBI = LieAlgebraData.from_terms(3, {(1, 2): [(1, 1)], (2, 3): [(2, 1)], (1, 3): [(3, 1)]})
AFFINE_LINE = LieAlgebraData.from_terms(2, {(1, 2): [(2, 1)]})


def test_structure_constants_are_antisymmetric():
    assert KODAIRA_THURSTON.structure_constant(1, 4, 2) == 1
    assert KODAIRA_THURSTON.structure_constant(4, 1, 2) == -1
    assert KODAIRA_THURSTON.structure_constant(1, 1, 2) == 0
    assert KODAIRA_THURSTON.bracket_basis(4, 1) == [0, -1, 0, 0]


def test_bracket_of_vectors_is_bilinear():
    x = [Fraction(1), 0, 0, Fraction(2)]
    y = [Fraction(3), 0, 0, Fraction(1)]
    # [x, y] = (1*1 - 2*3) [xi_1, xi_4]
    assert KODAIRA_THURSTON.bracket(x, y) == [0, -5, 0, 0]
    assert KODAIRA_THURSTON.bracket(x, x) == [0, 0, 0, 0]


def test_generator_differentials():
    assert differential_of_generator(KODAIRA_THURSTON, 2) == FormValue.monomial(4, (1, 4), -1)
    assert differential_of_generator(KODAIRA_THURSTON, 1).is_zero()
    assert differential_of_generator(HEISENBERG, 3) == FormValue.monomial(3, (1, 2), -1)


@pytest.mark.parametrize("algebra", [KODAIRA_THURSTON, HEISENBERG, LieAlgebraData.abelian(4)])
def test_ce_differential_squares_to_zero(algebra):
    d = ce_differential(algebra)
    assert (d @ d).is_zero()
    assert d.shift == 1


def test_ce_differential_is_a_derivation_on_products():
    d = ce_differential(KODAIRA_THURSTON)
    two_three = FormValue.monomial(4, (2, 3))
    # d(a2 ^ a3) = -a1 ^ a4 ^ a3 = a1 ^ a3 ^ a4
    assert d(two_three) == FormValue.monomial(4, (1, 3, 4))


def _random_form(rng, n):
    k = rng.randint(0, n)
    return FormValue.from_vector(n, k, [rng.randint(-2, 2) for _ in basis(n, k)]), k


@pytest.mark.parametrize("algebra", [KODAIRA_THURSTON, HEISENBERG, LieAlgebraData.abelian(4)])
def test_leibniz_rule_on_random_pairs(algebra):
    d = ce_differential(algebra)
    n = algebra.dimension
    rng = random.Random(2024)
    for _ in range(100):
        (a, p), (b, _) = _random_form(rng, n), _random_form(rng, n)
        assert d(a ^ b) == (d(a) ^ b) + (a ^ d(b)).scale((-1) ** p)


def test_jacobi_failures_are_reported():
    report = validate_lie_algebra(NOT_JACOBI)
    assert not report.passed
    assert report.failures[0]["triple"] == [1, 2, 3]
    with pytest.raises(ValidationError) as info:
        ce_differential(NOT_JACOBI)
    assert info.value.axiom == "JACOBI"


def test_unimodularity_is_recorded():
    assert validate_lie_algebra(KODAIRA_THURSTON).unimodular
    report = validate_lie_algebra(AFFINE_LINE)
    assert report.passed and not report.unimodular
    assert report.to_json()["trace_defects"] == [{"index": 1, "trace": "1"}]


@pytest.mark.parametrize("brackets", [{(2, 1): [(1, 1)]}, {(1, 5): [(1, 1)]}, {(1, 2): [(7, 1)]}])
def test_bad_bracket_indices(brackets):
    with pytest.raises(ValidationError) as info:
        LieAlgebraData.from_terms(4, brackets)
    assert info.value.axiom == "DIMENSION"
