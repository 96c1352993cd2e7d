"""Lie algebras given by structure constants on a fixed basis xi_1..xi_n."""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Sequence, Tuple

from ..exact_algebra import rational_to_string
from ..shared.errors import ValidationError
from ..shared.logger import log


BracketTerms = Tuple[Tuple[int, Fraction], ...]


@dataclass(frozen=True)
class LieAlgebraData:
    """[xi_i, xi_j] = sum_k c^k_ij xi_k, stored only for i < j."""

    dimension: int
    brackets: Mapping[Tuple[int, int], BracketTerms] = field(default_factory=dict)

    def __post_init__(self):
        if self.dimension < 1:
            raise ValidationError("DIMENSION", f"dimension must be positive, got {self.dimension}")
        for (i, j), terms in self.brackets.items():
            if not (1 <= i < j <= self.dimension):
                raise ValidationError("DIMENSION", f"bracket key ({i},{j}) needs 1 <= i < j <= {self.dimension}")
            for k, _ in terms:
                if not 1 <= k <= self.dimension:
                    raise ValidationError("DIMENSION", f"bracket ({i},{j}) has target index {k}")

    @classmethod
    def abelian(cls, dimension: int) -> "LieAlgebraData":
        return cls(dimension, {})

    @classmethod
    def from_terms(cls, dimension: int, brackets: Mapping[Tuple[int, int], Sequence[Tuple[int, object]]]) -> "LieAlgebraData":
        return cls(dimension, {key: tuple((k, Fraction(c)) for k, c in terms)
                               for key, terms in brackets.items()})

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        """c^k_ij for any ordered pair (antisymmetric in i, j)."""
        if i == j:
            return Fraction(0)
        sign = 1 if i < j else -1
        key = (i, j) if i < j else (j, i)
        return sign * sum((c for kk, c in self.brackets.get(key, ()) if kk == k), Fraction(0))

    def bracket_basis(self, i: int, j: int) -> List[Fraction]:
        return [self.structure_constant(i, j, k) for k in range(1, self.dimension + 1)]

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> List[Fraction]:
        """Bracket of two coefficient vectors (0-based lists)."""
        n = self.dimension
        out = [Fraction(0)] * n
        for (i, j), terms in self.brackets.items():
            coeff = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
            if not coeff:
                continue
            for k, c in terms:
                out[k - 1] += coeff * c
        return out

    def is_abelian(self) -> bool:
        return all(c == 0 for terms in self.brackets.values() for _, c in terms)


@dataclass
class LieValidationReport:
    passed: bool
    failures: List[Dict] = field(default_factory=list)
    unimodular: bool = True
    trace_defects: List[Dict] = field(default_factory=list)

    def to_json(self) -> Dict:
        return {
            "passed": self.passed,
            "jacobi_failures": self.failures,
            "unimodular": self.unimodular,
            "trace_defects": self.trace_defects,
        }


def _unit(n: int, i: int) -> List[Fraction]:
    v = [Fraction(0)] * n
    v[i - 1] = Fraction(1)
    return v


def validate_lie_algebra(data: LieAlgebraData) -> LieValidationReport:
    """Check the Jacobi identity on every triple and record unimodularity."""
    n = data.dimension
    failures = []
    for i, j, l in combinations(range(1, n + 1), 3):
        ei, ej, el = _unit(n, i), _unit(n, j), _unit(n, l)
        total = [a + b + c for a, b, c in zip(
            data.bracket(data.bracket(ei, ej), el),
            data.bracket(data.bracket(ej, el), ei),
            data.bracket(data.bracket(el, ei), ej),
        )]
        if any(total):
            failures.append({"triple": [i, j, l], "defect": [rational_to_string(x) for x in total]})

    trace_defects = []
    for i in range(1, n + 1):
        trace = sum((data.structure_constant(i, k, k) for k in range(1, n + 1)), Fraction(0))
        if trace:
            trace_defects.append({"index": i, "trace": rational_to_string(trace)})

    report = LieValidationReport(passed=not failures, failures=failures,
                                 unimodular=not trace_defects, trace_defects=trace_defects)
    if failures:
        log.debug(f"Jacobi identity fails on {len(failures)} triples, first {failures[0]['triple']}")
    if trace_defects:
        log.warning("Lie algebra is not unimodular; Gram adjoints differ from L2 adjoints")
    return report
