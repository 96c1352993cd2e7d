"""Shared manifolds; calculus tables are cached on each instance, so session scope saves most of the work."""
from fractions import Fraction

import pytest

from src.catalog_io import builtin
from src.exterior import FormValue


@pytest.fixture(scope="session")
def kodaira_thurston():
    return builtin("kodaira_thurston")


@pytest.fixture(scope="session")
def torus4():
    return builtin("torus4")


@pytest.fixture(scope="session")
def torus6():
    return builtin("torus6")


@pytest.fixture
def alpha():
    """alpha(i, j, ..., dimension=4) builds the monomial form alpha_i ^ alpha_j ^ ..."""
    def build(*indices, dimension=4, coeff=1):
        return FormValue.monomial(dimension, indices, Fraction(coeff))
    return build
