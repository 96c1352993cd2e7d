import random
from fractions import Fraction
from math import comb

import pytest

from src.operator_calc import (
    canonical_selection,
    graded_commutator,
    identity_suite,
    is_self_adjoint,
    joint_kernel,
    laplacian_by_name,
    operator_by_name,
    orthogonal_decomposition_check,
)
from src.shared.errors import ConsistencyError, ValidationError


@pytest.mark.parametrize("name", ["kodaira_thurston", "torus4"])
def test_identity_suite_has_no_defects(name, request):
    m = request.getfixturevalue(name)
    report = identity_suite(m, seed=0)
    assert report.passed, [c.id for c in report.failures]
    ids = {c.id for c in report.checks}
    assert {"dlambda.dLambda.L", "dlambda.square", "split.d_squared", "star.symplectic_square",
            "laplacian.dbar_plus_mu_quarter", "nijenhuis.factor"} <= ids


@pytest.mark.slow
def test_identity_suite_on_torus6(torus6):
    assert identity_suite(torus6, seed=0, jacobi_triples=3).passed


def test_identity_suite_is_deterministic(kodaira_thurston):
    first = identity_suite(kodaira_thurston, seed=7)
    second = identity_suite(kodaira_thurston, seed=7)
    assert first.model_dump_json() == second.model_dump_json()


def test_selection_spellings():
    assert canonical_selection("dbar-mu") == "dbar+mu"
    assert canonical_selection("dbar + mu") == "dbar+mu"
    assert canonical_selection("d,dLambda") == "d,dLambda"


def test_sum_of_laplacians_differs_from_laplacian_of_sum(kodaira_thurston):
    of_sum = laplacian_by_name(kodaira_thurston, "dbar+mu")
    quarter = laplacian_by_name(kodaira_thurston, "d,dLambda").scale(Fraction(1, 4))
    assert of_sum == quarter
    # they agree on 1-forms only up to the cross terms [dbar,mu*] + [mu,dbar*]
    pair = laplacian_by_name(kodaira_thurston, "dbar,mu")
    assert pair.restricted([1]) == of_sum.restricted([1])


def test_laplacian_of_d_on_alpha2(kodaira_thurston, alpha):
    delta = laplacian_by_name(kodaira_thurston, "d")
    assert delta(alpha(2)) == alpha(2)
    for i in (1, 3, 4):
        assert delta(alpha(i)).is_zero()


def test_laplacians_are_self_adjoint_and_operators_are_not(kodaira_thurston):
    for k in range(5):
        assert is_self_adjoint(kodaira_thurston, laplacian_by_name(kodaira_thurston, "dLambda"), k)
    assert not is_self_adjoint(kodaira_thurston, kodaira_thurston.calculus.d, 1)


def test_unknown_operator_is_a_validation_error(kodaira_thurston):
    with pytest.raises(ValidationError) as info:
        operator_by_name(kodaira_thurston, "nabla")
    assert info.value.axiom == "OPERATOR"
    with pytest.raises(ValidationError):
        laplacian_by_name(kodaira_thurston, ",")


def test_commutators_of_lefschetz_with_d(kodaira_thurston):
    calc = kodaira_thurston.calculus
    assert graded_commutator(calc.d, calc.L).is_zero()
    assert graded_commutator(calc.dLambda, calc.L) == calc.d


@pytest.mark.parametrize("selection", ["d", "dLambda", "dbar+mu", "mu,mubar"])
def test_orthogonal_decomposition_in_every_degree(kodaira_thurston, selection):
    op = laplacian_by_name(kodaira_thurston, selection)
    for k in range(5):
        report = orthogonal_decomposition_check(kodaira_thurston, op, k)
        assert report.complementary and report.orthogonal
        assert report.total_dimension == comb(4, k)


def test_expected_kernel_must_match(kodaira_thurston):
    calc = kodaira_thurston.calculus
    op = laplacian_by_name(kodaira_thurston, "d")
    joint = joint_kernel(kodaira_thurston, [calc.d, calc.adjoint("d")], 1)
    report = orthogonal_decomposition_check(kodaira_thurston, op, 1, expected_kernel=joint)
    assert report.kernel_dimension == 3
    with pytest.raises(ConsistencyError):
        orthogonal_decomposition_check(kodaira_thurston, op, 1, expected_kernel=joint[:2])


def test_decomposition_refuses_bad_input(kodaira_thurston):
    with pytest.raises(ValidationError):
        orthogonal_decomposition_check(kodaira_thurston, kodaira_thurston.calculus.d, 1)
    with pytest.raises(ValidationError):
        orthogonal_decomposition_check(kodaira_thurston, laplacian_by_name(kodaira_thurston, "d"), 5)


@pytest.mark.parametrize("name", ["kodaira_thurston", "torus4"])
def test_graded_jacobi_on_random_triples(name, request):
    m = request.getfixturevalue(name)
    pool = ["d", "d*", "L", "Lambda", "mu", "dLambda"]
    rng = random.Random(17)
    for _ in range(30):
        a, b, c = (operator_by_name(m, rng.choice(pool)) for _ in range(3))
        sign = -1 if a.parity * b.parity else 1
        left = graded_commutator(a, graded_commutator(b, c))
        right = graded_commutator(graded_commutator(a, b), c) + graded_commutator(b, graded_commutator(a, c)).scale(sign)
        assert left == right, (a.label, b.label, c.label)
