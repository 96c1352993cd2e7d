import random
from fractions import Fraction

import pytest

from src.exact_algebra import (
    INFINITY,
    ExactMatrix,
    GaussianRational,
    I,
    column_space,
    ensure_positive_semidefinite,
    isolate_real_roots,
    parse_rational,
    pencil_min_finite_eigenvalue,
    rational_to_string,
    smallest_positive,
    span_rank,
)
from src.shared.errors import (
    ManifestError,
    NonSquareMatrixError,
    NotPositiveSemidefiniteError,
    ShapeMismatchError,
    ZeroPolynomialError,
)


def test_parse_rational_exact_forms():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-2") == -2
    assert parse_rational(" 6/8 ") == Fraction(3, 4)
    assert parse_rational(5) == 5


@pytest.mark.parametrize("text", ["1.5", "1/0", "a", "", "1//2", True])
def test_parse_rational_rejects_malformed(text):
    with pytest.raises(ManifestError) as info:
        parse_rational(text, "/omega/0/c")
    assert info.value.pointer == "/omega/0/c"
    assert info.value.axiom == "MANIFEST"


def test_rational_to_string_is_canonical():
    assert rational_to_string(Fraction(4, 2)) == "2"
    assert rational_to_string(Fraction(-3, 6)) == "-1/2"


def test_gaussian_rational_arithmetic():
    z = GaussianRational(1, 1)
    assert z * z.conjugate() == 2
    assert z.norm2() == 2
    assert I * I == -1
    assert (z / z) == 1
    assert str(GaussianRational(Fraction(1, 2), -1)) == "1/2-1i"
    assert GaussianRational(3) == 3
    with pytest.raises(TypeError):
        GaussianRational.coerce(1.5)


def test_rank_and_nullspace():
    m = ExactMatrix([[1, 2], [2, 4]])
    assert m.rank() == 1
    assert m.nullspace() == [(-2, 1)]
    assert column_space(m) == [(1, 2)]
    assert span_rank([(1, 0, 0), (0, 1, 0), (1, 1, 0)], 3) == 2


def test_determinant_solve_and_inverse():
    m = ExactMatrix([[2, 1], [1, 3]])
    assert m.determinant() == 5
    assert m.inverse() @ m == ExactMatrix.identity(2)
    x = m.solve(ExactMatrix([[3], [4]]))
    assert m @ x == ExactMatrix([[3], [4]])
    with pytest.raises(ZeroDivisionError):
        ExactMatrix([[1, 2], [2, 4]]).inverse()


def test_complex_entries_and_conjugate_transpose():
    m = ExactMatrix([[1, I], [0, 2]])
    assert m.conjugate_transpose() == ExactMatrix([[1, 0], [-I, 2]])
    assert m.determinant() == 2


def test_char_poly_highest_degree_first():
    assert ExactMatrix.diagonal([2, 3]).char_poly() == [1, -5, 6]
    assert ExactMatrix([[0, 1], [-1, 0]]).char_poly() == [1, 0, 1]


def test_shape_errors():
    with pytest.raises(NonSquareMatrixError):
        ExactMatrix([[1, 2, 3]]).determinant()
    with pytest.raises(ShapeMismatchError):
        ExactMatrix([[1, 2]]) + ExactMatrix([[1], [2]])
    with pytest.raises(ShapeMismatchError):
        ExactMatrix([[1, 2], [3]])


def _random_matrix(rng, size, gaussian=False):
    def entry():
        value = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        if gaussian and rng.random() < 0.5:
            return GaussianRational(value, rng.randint(-2, 2))
        return value if rng.random() < 0.7 else 0
    return ExactMatrix([[entry() for _ in range(size)] for _ in range(size)])


@pytest.mark.parametrize("gaussian", [False, True])
def test_rank_plus_nullity_on_random_matrices(gaussian):
    rng = random.Random(11)
    for _ in range(25):
        m = _random_matrix(rng, 6, gaussian)
        kernel = m.nullspace()
        assert m.rank() + len(kernel) == 6
        for v in kernel:
            assert not any(m.apply(v))


def test_char_poly_agrees_with_determinant():
    rng = random.Random(5)
    for _ in range(10):
        m = _random_matrix(rng, 4, gaussian=True)
        coeffs = m.char_poly()
        for t in range(-2, 3):
            value = sum(c * t ** (len(coeffs) - 1 - i) for i, c in enumerate(coeffs))
            assert value == (ExactMatrix.identity(4).scale(t) - m).determinant()


def test_reduced_form_has_unit_pivots():
    reduced, pivots = ExactMatrix([[0, 2, 4], [1, I, 0], [1, 2 + I, 4]]).rref()
    assert pivots == [0, 1]
    assert reduced == ExactMatrix([[1, 0, -2 * I], [0, 1, 2], [0, 0, 0]])


def test_rational_roots_are_exact():
    roots = isolate_real_roots([1, -3, 2], Fraction(1, 1000))
    assert [r.as_string() for r in roots] == ["1", "2"]
    assert all(r.is_exact for r in roots)


def test_repeated_root_keeps_multiplicity():
    (root,) = isolate_real_roots([1, -2, 1], Fraction(1, 1000))
    assert root.as_string() == "1"
    assert root.multiplicity == 2


def test_irrational_roots_are_isolated():
    width = Fraction(1, 1000)
    negative, positive = isolate_real_roots([1, 0, -2], width)
    assert negative.sign() == -1 and positive.sign() == 1
    assert positive.upper - positive.lower <= width
    assert positive.lower ** 2 < 2 < positive.upper ** 2
    assert positive.compare(Fraction(7, 5)) == 1
    assert positive.compare(Fraction(3, 2)) == -1


def test_refine_shrinks_the_interval():
    _, root = isolate_real_roots([1, 0, -2], Fraction(1, 10))
    finer = root.refine(Fraction(1, 10 ** 9))
    assert finer.upper - finer.lower <= Fraction(1, 10 ** 9)
    assert root.lower <= finer.lower < finer.upper <= root.upper


def test_zero_polynomial_is_refused():
    with pytest.raises(ZeroPolynomialError):
        isolate_real_roots([0, 0], Fraction(1, 10))


def test_smallest_positive_skips_zero():
    roots = isolate_real_roots([1, -3, 0], Fraction(1, 100))
    assert smallest_positive(roots).as_string() == "3"
    assert smallest_positive(isolate_real_roots([1, 0], Fraction(1, 100))) is None


def test_pencil_smallest_generalized_eigenvalue():
    a = ExactMatrix.diagonal([2, 3])
    b = ExactMatrix.identity(2)
    best = pencil_min_finite_eigenvalue(a, b, ExactMatrix.identity(2).columns())
    assert best.as_string() == "2"


@pytest.mark.parametrize("basis, other", [
    ([(1, 0, 0), (0, 1, 0)], [(2, 1, 0), (1, -3, 0)]),
    ([(1, 0, 1), (0, 1, 0)], [(1, 1, 1), (1, -1, 1)]),
])
def test_pencil_ignores_the_choice_of_subspace_basis(basis, other):
    a = ExactMatrix([[2, 1, 0], [1, 2, 0], [0, 0, 7]])
    b = ExactMatrix.diagonal([1, 2, 1])
    first = pencil_min_finite_eigenvalue(a, b, basis)
    second = pencil_min_finite_eigenvalue(a, b, other)
    assert first.lower <= second.upper and second.lower <= first.upper
    assert first.is_exact == second.is_exact
    if first.is_exact:
        assert first.value == second.value


def test_pencil_drops_common_kernel_and_returns_infinity():
    a = ExactMatrix.diagonal([1, 0])
    b = ExactMatrix.diagonal([0, 0])
    assert pencil_min_finite_eigenvalue(a, b, ExactMatrix.identity(2).columns()) is INFINITY
    assert pencil_min_finite_eigenvalue(a, b, []) is INFINITY
    best = pencil_min_finite_eigenvalue(ExactMatrix.diagonal([3, 0]), ExactMatrix.diagonal([1, 0]),
                                        ExactMatrix.identity(2).columns())
    assert best.as_string() == "3"


def test_indefinite_form_reports_a_witness():
    with pytest.raises(NotPositiveSemidefiniteError) as info:
        ensure_positive_semidefinite(ExactMatrix([[0, 1], [1, 0]]), "test")
    assert info.value.witness is not None
    assert info.value.value.re < 0
    with pytest.raises(NotPositiveSemidefiniteError):
        pencil_min_finite_eigenvalue(ExactMatrix.diagonal([-1, 1]), ExactMatrix.identity(2),
                                     ExactMatrix.identity(2).columns())
