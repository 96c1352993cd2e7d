from fractions import Fraction
from math import comb

import pytest

from src.exterior import FormValue
from src.harmonic_analysis import (
    GAP_OPERATORS,
    build_report,
    decompose_form,
    dlambda_norm_audit,
    harmonic_space,
    hlc_audit,
    hodge_betti_numbers,
    hodge_decomposition_check,
    inequality_audit,
    laplacian_roots,
    membership_constant,
    mu_norms,
    perturbations,
    pure_full_check,
    same_span,
    spectral_gap,
    theorem_audit,
)
from src.operator_calc import identity_suite, laplacian_by_name, orthogonal_decomposition_check
from src.shared.errors import ValidationError


def test_betti_numbers(kodaira_thurston, torus4):
    assert hodge_betti_numbers(kodaira_thurston).betti == [1, 3, 4, 3, 1]
    assert hodge_betti_numbers(torus4).betti == [comb(4, k) for k in range(5)]


def test_harmonic_one_forms_of_kodaira_thurston(kodaira_thurston, alpha):
    space = harmonic_space(kodaira_thurston, "d", 1)
    expected = [alpha(i).to_vector(1) for i in (1, 3, 4)]
    assert space.size == 3
    assert same_span(space.basis, expected, 4)
    assert space.label() == "H^1_d"


def test_no_harmonic_20_forms(kodaira_thurston):
    numbers = hodge_betti_numbers(kodaira_thurston)
    assert numbers.hodge[(2, 0)] == 0
    assert harmonic_space(kodaira_thurston, "d", (2, 0)).size == 0
    with pytest.raises(ValidationError):
        harmonic_space(kodaira_thurston, "d", (3, 0))


def test_decomposition_fails_where_betti_is_odd(kodaira_thurston):
    one = hodge_decomposition_check(kodaira_thurston, 1)
    assert not one.holds and one.harmonic_dimension == 3
    assert one.witness is not None
    assert not hodge_decomposition_check(kodaira_thurston, 2).holds
    assert pure_full_check(kodaira_thurston, 2).pure


def test_torus_decomposes_everywhere(torus4):
    for k in range(5):
        assert hodge_decomposition_check(torus4, k).holds


def test_hard_lefschetz_fails_on_kodaira_thurston(kodaira_thurston, torus4):
    report = hlc_audit(kodaira_thurston)
    assert report.verdicts() == {"k1": False}
    one = report.degrees[1]
    assert one.statements == [False, False, False, False]
    assert one.lefschetz_d.rank == 2
    assert hlc_audit(torus4).verdicts() == {"k1": True}


def test_spectral_gaps(kodaira_thurston, torus4):
    assert spectral_gap(kodaira_thurston, "d", 1).as_string() == "1"
    assert spectral_gap(kodaira_thurston, "dbar+mu", 1).as_string() == "1/4"
    assert spectral_gap(torus4, "d", 1) is None


def test_mu_size_on_kodaira_thurston(kodaira_thurston):
    norms = mu_norms(kodaira_thurston)
    assert norms.real_coefficient_max2 == Fraction(1, 16)
    assert norms.quarter["real_coefficient"]


def test_membership_constants_on_kodaira_thurston(kodaira_thurston):
    mtilde = membership_constant(kodaira_thurston, "Mtilde", 1)
    assert mtilde.best_constant.as_string() == "2"
    assert mtilde.status == "threshold not strictly met"
    assert not mtilde.meets_threshold
    assert membership_constant(kodaira_thurston, "M", 1).best_constant.as_string() == "2"


def test_torus_constants_are_infinite(torus4):
    for name in ("M", "Mtilde", "Mbar"):
        result = membership_constant(torus4, name, 1)
        assert result.best_constant.as_string() == "+inf"
        assert result.subspace_dimension == 0


def test_unknown_family(kodaira_thurston):
    with pytest.raises(ValidationError) as info:
        membership_constant(kodaira_thurston, "N", 1)
    assert info.value.axiom == "FAMILY"


@pytest.mark.parametrize("which", ["baseline", "decomposition", "dlambda"])
def test_inequalities_have_nonnegative_slack(kodaira_thurston, which):
    report = inequality_audit(kodaira_thurston, which, 1, seed=0, random_vectors=3)
    assert report.samples > 0
    assert report.min_slack >= 0


def test_dlambda_norm_identities(kodaira_thurston):
    report = dlambda_norm_audit(kodaira_thurston, 1)
    assert report.passed and len(report.checks) == 3
    for check in report.checks:
        assert check.one_form[0] == check.one_form[1]
    assert any(check.one_form[0] > 0 for check in report.checks)
    assert dlambda_norm_audit(kodaira_thurston, 2).passed


def test_theorem_audit(kodaira_thurston, torus4):
    report = theorem_audit(kodaira_thurston)
    assert report.b2_plus == 2
    assert not report.integrable
    assert report.violations == []
    assert theorem_audit(torus4).integrable


def test_decompose_form_splits_coexact_part(kodaira_thurston, alpha):
    form = alpha(1) + alpha(2)
    (one,) = decompose_form(kodaira_thurston, form).degrees
    assert one.harmonic == alpha(1)
    assert one.coexact == alpha(2)
    assert one.exact.is_zero()


def test_decompose_form_lefschetz_pieces(kodaira_thurston):
    omega = kodaira_thurston.omega
    (two,) = decompose_form(kodaira_thurston, omega).degrees
    assert [p["r"] for p in two.lefschetz] == [1]
    assert two.lefschetz[0]["primitive"] == FormValue.one(4)


def test_perturbations_are_reproducible(kodaira_thurston):
    first = [p.acs.matrix for p in perturbations(kodaira_thurston, seed=3, count=2)]
    second = [p.acs.matrix for p in perturbations(kodaira_thurston, seed=3, count=2)]
    assert first == second


@pytest.mark.slow
def test_perturbations_keep_the_invariants(kodaira_thurston):
    for sample in perturbations(kodaira_thurston, seed=1, count=3):
        assert hodge_betti_numbers(sample).betti == [1, 3, 4, 3, 1]
        assert hlc_audit(sample).verdicts() == {"k1": False}


@pytest.mark.slow
def test_report_is_deterministic(kodaira_thurston):
    first = build_report(kodaira_thurston, seed=0).model_dump_json()
    assert first == build_report(kodaira_thurston, seed=0).model_dump_json()
    assert '"b":[1,3,4,3,1]' in first
    assert '"hlc":{"k1":false}' in first


@pytest.mark.slow
@pytest.mark.parametrize("name", ["torus4", "kodaira_thurston"])
def test_property_sweep_over_perturbations(name, request):
    base = request.getfixturevalue(name)
    for sample in perturbations(base, seed=0, count=20):
        assert identity_suite(sample, seed=0, jacobi_triples=2).passed, sample.name
        # raises on a broken diamond symmetry, bound or parity
        numbers = hodge_betti_numbers(sample)
        assert numbers.betti == hodge_betti_numbers(base).betti
        theorem_audit(sample)
        laplacian = laplacian_by_name(sample, "d")
        for k in range(sample.dimension + 1):
            split = orthogonal_decomposition_check(sample, laplacian, k)
            assert split.total_dimension == comb(sample.dimension, k)
            assert split.complementary and split.orthogonal
            assert split.kernel_dimension == numbers.betti[k]


@pytest.mark.parametrize("name", ["kodaira_thurston", "torus4"])
@pytest.mark.parametrize("selection", GAP_OPERATORS)
def test_laplacian_eigenvalues_are_nonnegative(name, selection, request):
    m = request.getfixturevalue(name)
    for k in range(m.dimension + 1):
        roots = laplacian_roots(m, selection, k)
        assert sum(r.multiplicity for r in roots) == comb(m.dimension, k)
        assert all(r.sign() >= 0 for r in roots), (selection, k)
