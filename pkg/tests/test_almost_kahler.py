from fractions import Fraction
from math import comb

import pytest

from src.almost_kahler import (
    AlmostComplexStructure,
    adjoint,
    bigrade_projection,
    cal_J,
    d_lambda_ops,
    hodge_star,
    lefschetz_decomposition,
    lefschetz_ops,
    nijenhuis,
    primitive_space,
    split_d,
    symplectic_star,
    validate_ak,
)
from src.almost_kahler.structure import omega_matrix
from src.exact_algebra import ExactMatrix
from src.exterior import FormValue, identity_operator
from src.lie_algebra import LieAlgebraData
from src.shared.errors import ValidationError

ABELIAN = LieAlgebraData.abelian(4)
KT_ALGEBRA = LieAlgebraData.from_terms(4, {(1, 4): [(2, 1)]})
STANDARD_J = AlmostComplexStructure.from_rows([
    [0, 1, 0, 0],
    [-1, 0, 0, 0],
    [0, 0, 0, 1],
    [0, 0, -1, 0],
])


def _form(*terms):
    """_form(((1, 2), 1), ...) builds a 2-form on four generators."""
    return FormValue(4, {pair: Fraction(c) for pair, c in terms})


@pytest.mark.parametrize("algebra, acs, omega, axiom", [
    (ABELIAN, AlmostComplexStructure.from_rows([[1, 0], [0, 1]]), _form(((1, 2), 1)), "DIMENSION"),
    (LieAlgebraData.from_terms(4, {(1, 2): [(1, 1)], (2, 3): [(2, 1)], (1, 3): [(3, 1)]}),
     STANDARD_J, _form(((1, 2), 1), ((3, 4), 1)), "JACOBI"),
    (ABELIAN, AlmostComplexStructure.from_rows([[1 if i == j else 0 for j in range(4)] for i in range(4)]),
     _form(((1, 2), 1), ((3, 4), 1)), "J_SQUARE"),
    (ABELIAN, STANDARD_J, FormValue.generator(4, 1), "OMEGA_NOT_2FORM"),
    (KT_ALGEBRA, STANDARD_J, _form(((1, 2), 1), ((3, 4), 1), ((2, 3), 1)), "OMEGA_NOT_CLOSED"),
    (ABELIAN, STANDARD_J, _form(((1, 2), 1)), "OMEGA_DEGENERATE"),
    (ABELIAN, STANDARD_J, _form(((1, 2), 1), ((3, 4), 1), ((1, 3), 1)), "OMEGA_NOT_J_INVARIANT"),
    (ABELIAN, STANDARD_J, _form(((1, 2), -1), ((3, 4), -1)), "METRIC_NOT_SPD"),
])
def test_each_axiom_has_its_own_code(algebra, acs, omega, axiom):
    with pytest.raises(ValidationError) as info:
        validate_ak("bad", algebra, acs, omega)
    assert info.value.axiom == axiom


def test_metric_is_j_transpose_omega(kodaira_thurston, torus4):
    for m in (kodaira_thurston, torus4):
        assert m.metric == m.acs.matrix.transpose() @ omega_matrix(m)
        assert m.metric == ExactMatrix.identity(4)
        assert m.norm2(m.volume) == 1
        # omega(X, JY) is the negative of g for a compatible J
        assert omega_matrix(m) @ m.acs.matrix == -m.metric


def test_volume_form_of_kodaira_thurston(kodaira_thurston):
    assert kodaira_thurston.volume == FormValue.monomial(4, (1, 2, 3, 4), -1)
    assert kodaira_thurston.complex_dimension == 2
    assert kodaira_thurston.unimodular


def test_bidegree_projections_resolve_the_identity(kodaira_thurston):
    calc = kodaira_thurston.calculus
    for k in range(5):
        total = ExactMatrix.zeros(comb(4, k), comb(4, k))
        for proj in calc.projections[k].values():
            assert proj @ proj == proj
            total = total + proj
        assert total == ExactMatrix.identity(comb(4, k))


def test_d_splits_into_four_components(kodaira_thurston):
    mu, delta, dbar, mubar = split_d(kodaira_thurston)
    assert mu + delta + dbar + mubar == kodaira_thurston.calculus.d
    assert mu.bidegree == (2, -1) and mubar.bidegree == (-1, 2)


def test_mu_plus_mubar_on_one_forms(kodaira_thurston, alpha):
    calc = kodaira_thurston.calculus
    both = calc.mu + calc.mubar
    quarter = Fraction(1, 4)
    assert both(alpha(2)) == (alpha(2, 3) - alpha(1, 4)).scale(quarter)
    assert both(alpha(4)) == (alpha(3, 4) - alpha(1, 2)).scale(quarter)
    assert both(alpha(1)).is_zero()
    assert both(alpha(3)).is_zero()


def test_nijenhuis_detectors(kodaira_thurston, torus4):
    report = kodaira_thurston.calculus.nijenhuis
    assert not report.integrable
    assert not report.mu_vanishes
    assert report.detectors_agree and report.factor_consistent
    flat = torus4.calculus.nijenhuis
    assert flat.integrable and flat.mu_vanishes and flat.detectors_agree


def test_hodge_star_on_two_forms(kodaira_thurston, alpha):
    star = kodaira_thurston.calculus.star
    assert star(alpha(1, 2)) == -alpha(3, 4)
    assert star(alpha(1, 3)) == alpha(2, 4)
    assert star(alpha(1, 2) - alpha(3, 4)) == alpha(1, 2) - alpha(3, 4)


def test_stars_square_as_expected(kodaira_thurston):
    calc = kodaira_thurston.calculus
    one = identity_operator(4)
    assert calc.star @ calc.star == one.degreewise(lambda k: (-1) ** k)
    assert calc.star_s @ calc.star_s == one


def test_lambda_is_the_adjoint_of_l(kodaira_thurston, alpha):
    calc = kodaira_thurston.calculus
    assert calc.Lambda == calc.Lambda_from_star
    assert calc.L(FormValue.one(4)) == kodaira_thurston.omega
    assert calc.Lambda(kodaira_thurston.omega) == FormValue.one(4).scale(2)


def test_lefschetz_decomposition_fills_every_degree(kodaira_thurston):
    pieces = lefschetz_decomposition(kodaira_thurston)
    for k in range(5):
        assert sum(p["dimension"] for p in pieces[k]) == comb(4, k)
    assert len(primitive_space(kodaira_thurston, 1)) == 4
    assert len(primitive_space(kodaira_thurston, 2)) == 5
    assert primitive_space(kodaira_thurston, 3) == []


def test_dlambda_representations_agree(kodaira_thurston):
    calc = kodaira_thurston.calculus
    assert calc.dLambda == calc.dLambda_via_calJ == calc.dLambda_via_star_s
    assert calc.dLambda_star == calc.dLambda_star_via_calJ


def test_only_the_degree_consistent_del_star_formula_matches(kodaira_thurston):
    variant = kodaira_thurston.calculus.del_star_variants()
    assert variant["matches"]
    assert not variant["short_is_degree_consistent"]


def test_public_operator_accessors(kodaira_thurston):
    m = kodaira_thurston
    calc = m.calculus
    L, Lambda, _ = lefschetz_ops(m)
    assert L == calc.L and Lambda == calc.Lambda
    assert d_lambda_ops(m) == (calc.dLambda, calc.dLambda_star)
    assert hodge_star(m) == calc.star and symplectic_star(m) == calc.star_s
    assert adjoint(m, calc.d) == calc.adjoint("d")
    assert nijenhuis(m) is calc.nijenhuis
    project = bigrade_projection(m, 1, 0)
    assert project @ project == project
    j = cal_J(m)
    assert (j @ j).block(1) == ExactMatrix.identity(4).scale(-1)
