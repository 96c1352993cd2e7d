"""Membership constants of the spectral families and the inequalities built on them.

Every family compares a Laplacian A with B = Delta_mu + Delta_mubar on an
orthocomplement of harmonic forms; the best constant is
sup{c : <A x, x> >= c <B x, x>} on that subspace.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List, Optional

from ..almost_kahler import AKManifold
from ..exact_algebra import (
    ExactMatrix,
    GaussianRational,
    RealAlgebraicRoot,
    Vector,
    pencil_min_finite_eigenvalue,
    quadratic_form,
    rational_to_string,
)
from ..operator_calc import laplacian_by_name
from ..shared.config import get_config
from ..shared.errors import ConsistencyError, ValidationError
from ..shared.logger import log
from .spaces import bigraded_sum, check_degree, harmonic_space, orthocomplement, orthogonal_projection

MU_PAIR = "mu,mubar"
FLOOR = Fraction(1, 2)


@dataclass(frozen=True)
class Family:
    name: str
    laplacian: str
    harmonic: Callable[[AKManifold, int], List[Vector]]
    threshold: Callable[[int], Optional[Fraction]]


FAMILIES: Dict[str, Family] = {
    "M": Family("M", "dbar,mu", lambda m, k: bigraded_sum(m, "d", k), lambda k: Fraction(20)),
    "Mtilde": Family("Mtilde", "dbar+mu", lambda m, k: list(harmonic_space(m, "dbar+mu", k).basis),
                     lambda k: Fraction(2) if k == 1 else Fraction(4)),
    "Mbar": Family("Mbar", "d", lambda m, k: list(harmonic_space(m, "d", k).basis), lambda k: None),
}


def family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValidationError("FAMILY", f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")


@dataclass
class MembershipResult:
    family: str
    degree: int
    best_constant: RealAlgebraicRoot
    threshold: Optional[Fraction]
    subspace_dimension: int

    @property
    def meets_threshold(self) -> bool:
        return self.threshold is not None and self.best_constant.compare(self.threshold) > 0

    @property
    def status(self) -> str:
        if self.threshold is None:
            return "no threshold"
        side = self.best_constant.compare(self.threshold)
        if side > 0:
            return "threshold met"
        if side == 0:
            return "threshold not strictly met"
        return "threshold not met"

    def to_json(self) -> Dict:
        return {
            "family": self.family,
            "degree": self.degree,
            "best_constant": self.best_constant.as_string(),
            "threshold": rational_to_string(self.threshold) if self.threshold is not None else None,
            "meets_threshold": self.meets_threshold,
            "status": self.status,
            "subspace_dimension": self.subspace_dimension,
        }


def family_subspace(m: AKManifold, name: str, k: int) -> List[Vector]:
    return orthocomplement(m, k, family(name).harmonic(m, k))


def membership_constant(m: AKManifold, name: str, k: int, width: Fraction = None) -> MembershipResult:
    """Best constant of family ``name`` in degree k, compared with its threshold."""
    check_degree(m, k)
    fam = family(name)
    width = width or get_config().precision.width

    def compute() -> MembershipResult:
        subspace = family_subspace(m, name, k)
        best = pencil_min_finite_eigenvalue(
            laplacian_by_name(m, fam.laplacian).block(k),
            laplacian_by_name(m, MU_PAIR).block(k),
            subspace, m.tower.gram(k), width,
        )
        return MembershipResult(family=name, degree=k, best_constant=best,
                                threshold=fam.threshold(k), subspace_dimension=len(subspace))

    result = m.calculus.memo(f"membership:{name}:{k}:{width}", compute)
    if name == "M" and result.best_constant.compare(FLOOR) < 0:
        raise ConsistencyError("MEMBERSHIP_FLOOR", f"c(M,{k}) = {result.best_constant.as_string()} is below 1/2")
    log.debug(f"{m.name}: {name} constant in degree {k}: {result.best_constant.as_string()} ({result.status})")
    return result


# inequality audits

INEQUALITIES = ("baseline", "decomposition", "dlambda")


@dataclass
class InequalityReport:
    which: str
    degree: int
    constant: Optional[str]
    premise_met: bool
    samples: int
    min_slack: Optional[Fraction]
    seed: int
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> Dict:
        return {
            "inequality": self.which,
            "degree": self.degree,
            "constant": self.constant,
            "premise_met": self.premise_met,
            "samples": self.samples,
            "min_slack": rational_to_string(self.min_slack) if self.min_slack is not None else None,
            "seed": self.seed,
            "notes": self.notes,
        }


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def sample_vectors(basis: List[Vector], count: int, rng: random.Random) -> List[Vector]:
    """The basis itself followed by ``count`` Gaussian-rational combinations of it."""
    if not basis:
        return []
    size = len(basis[0])
    s = ExactMatrix.from_columns(basis, size)
    out = list(basis)
    for _ in range(count):
        coeffs = [GaussianRational(_random_rational(rng), _random_rational(rng)) for _ in basis]
        out.append(s.apply(coeffs))
    return out


def _coefficient(result: MembershipResult, shift: Fraction, scale: Fraction) -> Fraction:
    """scale * (c - shift) with c replaced by a certified lower bound; 0 when c is infinite."""
    if result.best_constant.is_infinite:
        return Fraction(0)
    return scale * (result.best_constant.lower - shift)


def inequality_audit(m: AKManifold, which: str, k: int, seed: int = None,
                     random_vectors: int = None) -> InequalityReport:
    """Evaluate one lower bound for <Delta x, x> exactly on sample vectors.

    ``baseline``: <(Delta_dbar + Delta_mu) x, x> >= 1/2 <B x, x>.
    ``decomposition``: <Delta_d a, a> >= 4/3 (c - 20) <B b, b> with b the
    projection of a onto the complement of the bigraded harmonic sum.
    ``dlambda``: <Delta_d g, g> >= (c - 8) <B g, g> for g orthogonal to
    ker Delta_{dbar+mu}, and again for g orthogonal to H_d.

    Negative slack raises ``ConsistencyError``.
    """
    if which not in INEQUALITIES:
        raise ValidationError("INEQUALITY", f"unknown inequality {which!r}; expected one of {', '.join(INEQUALITIES)}")
    check_degree(m, k)
    config = get_config()
    seed = config.audit.seed if seed is None else seed
    count = config.audit.random_vectors if random_vectors is None else random_vectors
    rng = random.Random(seed)
    gram = m.tower.gram(k)
    b_block = laplacian_by_name(m, MU_PAIR).block(k)
    delta_d = laplacian_by_name(m, "d").block(k)

    def q(block: ExactMatrix, x) -> Fraction:
        return quadratic_form(block, gram, x).re

    slacks: List[Fraction] = []
    notes: List[str] = []
    if which == "baseline":
        constant, premise = None, True
        a_block = laplacian_by_name(m, "dbar,mu").block(k)
        for x in sample_vectors(family_subspace(m, "M", k), count, rng):
            slacks.append(q(a_block, x) - FLOOR * q(b_block, x))
    elif which == "decomposition":
        result = membership_constant(m, "M", k)
        constant, premise = result.best_constant.as_string(), result.meets_threshold
        coefficient = _coefficient(result, Fraction(20), Fraction(4, 3))
        target = family_subspace(m, "M", k)
        ambient = ExactMatrix.identity(comb(m.dimension, k)).columns()
        for a in sample_vectors(ambient, count, rng):
            b = orthogonal_projection(m, k, target, a)
            slacks.append(q(delta_d, a) - coefficient * q(b_block, b))
    else:
        result = membership_constant(m, "Mtilde", k)
        constant, premise = result.best_constant.as_string(), result.meets_threshold
        coefficient = _coefficient(result, Fraction(8), Fraction(1))
        for name in ("Mtilde", "Mbar"):
            for g in sample_vectors(family_subspace(m, name, k), count, rng):
                slacks.append(q(delta_d, g) - coefficient * q(b_block, g))
    if not premise and which != "baseline":
        notes.append("threshold not met; inequality evaluated without a conclusion")

    report = InequalityReport(which=which, degree=k, constant=constant, premise_met=premise,
                              samples=len(slacks), min_slack=min(slacks) if slacks else None,
                              seed=seed, notes=notes)
    if report.min_slack is not None and report.min_slack < 0:
        raise ConsistencyError("INEQUALITY", f"{which} inequality has negative slack in degree {k}",
                               defect=rational_to_string(report.min_slack))
    log.debug(f"{m.name}: {which} inequality in degree {k}: {report.samples} samples, "
              f"min slack {report.to_json()['min_slack']}")
    return report
