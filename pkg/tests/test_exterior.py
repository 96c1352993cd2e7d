from fractions import Fraction

import pytest

from src.exact_algebra import ExactMatrix, I
from src.exterior import (
    FormValue,
    IndexMonomial,
    basis,
    complement,
    compound_gram,
    degree_projection,
    derivation,
    identity_operator,
    inner_product,
    multiplication,
    wedge,
    wedge_power,
)
from src.shared.errors import ManifestError, ShapeMismatchError


def test_wedge_is_antisymmetric_on_one_forms(alpha):
    assert wedge(alpha(1), alpha(2)) == -wedge(alpha(2), alpha(1))
    assert wedge(alpha(3), alpha(3)).is_zero()
    assert alpha(2, 1) == -alpha(1, 2)


def test_even_forms_commute(alpha):
    two = alpha(1, 2) + alpha(3, 4)
    assert wedge(two, alpha(3)) == wedge(alpha(3), two)
    assert (alpha(1) ^ alpha(2) ^ alpha(3)) == alpha(1, 2, 3)


def test_wedge_power_of_symplectic_form(alpha):
    omega = alpha(1, 2) + alpha(3, 4)
    assert wedge_power(omega, 2) == alpha(1, 2, 3, 4, coeff=2)
    assert wedge_power(omega, 3).is_zero()
    assert wedge_power(omega, 0) == FormValue.one(4)


def test_basis_is_lexicographic():
    assert [m.key for m in basis(4, 2)] == ["e1^e2", "e1^e3", "e1^e4", "e2^e3", "e2^e4", "e3^e4"]
    assert basis(4, 0) == (IndexMonomial(),)
    assert basis(4, 5) == ()
    assert complement(4, IndexMonomial((1, 3))) == IndexMonomial((2, 4))


def test_monomial_keys():
    assert IndexMonomial.parse("e1^e3") == (1, 3)
    assert IndexMonomial.parse("1") == ()
    for bad in ("e3^e1", "x1", "e1^^e2"):
        with pytest.raises(ManifestError):
            IndexMonomial.parse(bad)


def test_json_form_uses_monomial_keys(alpha):
    form = alpha(1, 3).scale(Fraction(1, 2)) + alpha(2).scale(I)
    data = form.to_json()
    assert list(data) == ["e2", "e1^e3"]
    assert data["e1^e3"] == {"re": "1/2", "im": "0"}
    assert FormValue.from_json(4, {"e1^e3": {"re": "1/2"}, "e2": {"im": "1"}}) == form


def test_homogeneous_parts_and_vectors(alpha):
    form = alpha(1) + alpha(2, 4)
    assert form.degrees() == [1, 2]
    assert form.homogeneous(2) == alpha(2, 4)
    vector = form.to_vector(2)
    assert vector[4] == 1 and sum(1 for x in vector if x) == 1
    assert FormValue.from_vector(4, 2, vector) == alpha(2, 4)


def test_dimension_mismatches_raise(alpha):
    with pytest.raises(ShapeMismatchError):
        alpha(1) + alpha(1, dimension=6)
    with pytest.raises(ShapeMismatchError):
        FormValue(2, {(1, 3): 1})


def test_compound_gram_is_multiplicative():
    g = ExactMatrix.diagonal([2, 3, 5])
    assert compound_gram(g, 2) == ExactMatrix.diagonal([6, 10, 15])
    assert compound_gram(g, 3) == ExactMatrix([[30]])
    assert compound_gram(g, 0) == ExactMatrix.identity(1)


def test_inner_product_is_conjugate_linear_in_second_slot(alpha):
    g = ExactMatrix.diagonal([1, 2, 1, 1])
    a = alpha(1, 2)
    assert inner_product(a, a, g) == 2
    assert inner_product(a.scale(I), a, g) == I * 2
    assert inner_product(a, a.scale(I), g) == -I * 2
    assert inner_product(a, alpha(1), g) == 0


def test_multiplication_squares_to_zero_on_odd_forms(alpha):
    left = multiplication("a1^", alpha(1))
    assert left(alpha(2)) == alpha(1, 2)
    assert (left @ left).is_zero()
    assert left.shift == 1


def test_derivation_obeys_graded_leibniz(alpha):
    d = derivation("D", 4, {1: alpha(2, 3)}, shift=1)
    assert d(alpha(1)) == alpha(2, 3)
    assert d(alpha(1, 4)) == alpha(2, 3, 4)
    assert d(alpha(4, 1)) == -alpha(2, 3, 4)
    assert d(alpha(2, 3)).is_zero()


def test_operator_algebra(alpha):
    one = identity_operator(4)
    assert one.power(3) == one
    project = degree_projection(4, 2)
    assert project(alpha(1) + alpha(1, 2)) == alpha(1, 2)
    doubled = one + one
    assert doubled(alpha(3)) == alpha(3, coeff=2)
    assert (doubled - one.scale(2)).is_zero()
    assert doubled.first_defect(one) is not None
    assert one.degreewise(lambda k: (-1) ** k)(alpha(1) + alpha(1, 2)) == alpha(1, 2) - alpha(1)
