"""Compatible pairs (omega, J) on a Lie algebra and their validation."""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from ..exact_algebra import ExactMatrix, rational_to_string
from ..exterior import FormValue, GramTower, basis, wedge_power
from ..lie_algebra import LieAlgebraData, ce_differential, validate_lie_algebra
from ..shared.errors import ConsistencyError, ValidationError
from ..shared.logger import log

# checked in this order by validate_ak
AXIOMS = (
    "DIMENSION",
    "JACOBI",
    "J_SQUARE",
    "OMEGA_NOT_2FORM",
    "OMEGA_NOT_CLOSED",
    "OMEGA_DEGENERATE",
    "OMEGA_NOT_J_INVARIANT",
    "METRIC_NOT_SPD",
)


@dataclass(frozen=True)
class AlmostComplexStructure:
    """J acting on vectors by columns: J xi_i = sum_j entries[j][i] xi_j."""

    entries: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "AlmostComplexStructure":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @property
    def dimension(self) -> int:
        return len(self.entries)

    @property
    def matrix(self) -> ExactMatrix:
        return ExactMatrix(self.entries, self.dimension)

    def apply(self, vector: Sequence[Fraction]) -> List[Fraction]:
        return [sum((row[i] * vector[i] for i in range(len(row)) if row[i] and vector[i]), Fraction(0))
                for row in self.entries]

    def to_strings(self) -> List[List[str]]:
        return [[rational_to_string(x) for x in row] for row in self.entries]


@dataclass(frozen=True)
class SymplecticData:
    omega: FormValue

    def matrix(self) -> List[List[Fraction]]:
        """Omega[i][j] = omega(xi_i, xi_j), 0-based."""
        n = self.omega.dimension
        out = [[Fraction(0)] * n for _ in range(n)]
        for mono, coeff in self.omega.coefficients.items():
            i, j = mono
            out[i - 1][j - 1] += coeff.re
            out[j - 1][i - 1] -= coeff.re
        return out


@dataclass(frozen=True, eq=False)
class AKManifold:
    """A validated almost Kaehler Lie algebra.

    Only ``validate_ak`` should build instances. Derived operators live in
    the build-once ``calculus`` table.
    """

    name: str
    algebra: LieAlgebraData
    acs: AlmostComplexStructure
    symp: SymplecticData
    metric: ExactMatrix
    gram1: ExactMatrix
    volume: FormValue
    compact_quotient: str = "assumed"
    nomizu: bool = False
    annotations: Tuple[str, ...] = field(default_factory=tuple)
    unimodular: bool = True

    @property
    def dimension(self) -> int:
        """Real dimension of the Lie algebra."""
        return self.algebra.dimension

    @property
    def complex_dimension(self) -> int:
        return self.algebra.dimension // 2

    @property
    def omega(self) -> FormValue:
        return self.symp.omega

    @cached_property
    def tower(self) -> GramTower:
        return GramTower(self.gram1)

    @cached_property
    def calculus(self):
        from .calculus import StructureCalculus
        return StructureCalculus(self)

    def inner(self, a: FormValue, b: FormValue):
        return self.tower.inner(a, b)

    def norm2(self, a: FormValue) -> Fraction:
        return self.tower.norm2(a)


def _first_difference(a: ExactMatrix, b: ExactMatrix) -> Optional[Dict]:
    for i in range(a.rows):
        for j in range(a.cols):
            if a[i, j] != b[i, j]:
                return {"row": i + 1, "col": j + 1, "found": str(a[i, j]), "expected": str(b[i, j])}
    return None


def _leading_minors(m: ExactMatrix) -> List[Fraction]:
    out = []
    for size in range(1, m.rows + 1):
        block = ExactMatrix([[m[i, j] for j in range(size)] for i in range(size)])
        out.append(block.determinant().re)
    return out


def validate_ak(
    name: str,
    algebra: LieAlgebraData,
    acs: AlmostComplexStructure,
    omega: FormValue,
    compact_quotient: str = "assumed",
    nomizu: bool = False,
    annotations: Sequence[str] = (),
) -> AKManifold:
    """Check every axiom of an almost Kaehler structure and build the manifold.

    Each failing axiom raises ``ValidationError`` with its own code. The
    metric is g(X, Y) = omega(JX, Y) = omega(X, J^-1 Y), the matrix J^T Omega
    with J acting on columns. omega(X, JY) is -g for a compatible J, so
    catalogue data written for that form carries the opposite sign of omega.
    """
    n = algebra.dimension
    if acs.dimension != n or any(len(row) != n for row in acs.entries) or omega.dimension != n:
        raise ValidationError("DIMENSION", f"algebra, J and omega must all have dimension {n}")
    if n % 2:
        raise ValidationError("DIMENSION", f"almost complex structures need even dimension, got {n}")

    lie_report = validate_lie_algebra(algebra)
    if not lie_report.passed:
        first = lie_report.failures[0]
        raise ValidationError("JACOBI", f"Jacobi identity fails on triple {tuple(first['triple'])}",
                              witness=first)

    j = acs.matrix
    square = j @ j
    defect = _first_difference(square, -ExactMatrix.identity(n))
    if defect is not None:
        raise ValidationError("J_SQUARE", "J^2 != -1", witness=defect)

    if omega.degrees() not in ([2], []) or any(not c.is_real() for c in omega.coefficients.values()):
        raise ValidationError("OMEGA_NOT_2FORM", "omega must be a real 2-form")

    d_omega = ce_differential(algebra).apply(omega)
    if not d_omega.is_zero():
        raise ValidationError("OMEGA_NOT_CLOSED", "d omega != 0", witness=d_omega.to_json())

    m = n // 2
    top = wedge_power(omega, m)
    if top.is_zero():
        raise ValidationError("OMEGA_DEGENERATE", f"omega^{m} = 0")

    big_omega = ExactMatrix(SymplecticData(omega).matrix())
    invariant = j.transpose() @ big_omega @ j
    defect = _first_difference(invariant, big_omega)
    if defect is not None:
        raise ValidationError("OMEGA_NOT_J_INVARIANT", "omega(J., J.) != omega", witness=defect)

    metric = j.transpose() @ big_omega
    if metric != metric.transpose():
        raise ValidationError("METRIC_NOT_SPD", "g is not symmetric")
    minors = _leading_minors(metric)
    bad = next((i for i, x in enumerate(minors) if x <= 0), None)
    if bad is not None:
        raise ValidationError("METRIC_NOT_SPD", f"leading minor of size {bad + 1} is "
                                                f"{rational_to_string(minors[bad])}",
                              witness={"minors": [rational_to_string(x) for x in minors]})

    volume = top.scale(Fraction(1, factorial(m)))
    manifold = AKManifold(
        name=name,
        algebra=algebra,
        acs=acs,
        symp=SymplecticData(omega),
        metric=metric,
        gram1=metric.inverse(),
        volume=volume,
        compact_quotient=compact_quotient,
        nomizu=nomizu,
        annotations=tuple(annotations),
        unimodular=lie_report.unimodular,
    )
    if manifold.norm2(volume) != 1:
        raise ConsistencyError("VOLUME", "omega^n/n! is not a unit form for the metric",
                               defect=rational_to_string(manifold.norm2(volume)))
    log.debug(f"Validated {name}: dimension {n}, unimodular={lie_report.unimodular}")
    return manifold


def omega_matrix(manifold: AKManifold) -> ExactMatrix:
    return ExactMatrix(manifold.symp.matrix())


def top_coefficient(manifold: AKManifold):
    """v with volume = v * e1^...^en."""
    (mono,) = basis(manifold.dimension, manifold.dimension)
    return manifold.volume.coefficients[mono]
