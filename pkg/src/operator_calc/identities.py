"""Exact identity suites for the structure operators of a manifold.

Every identity is evaluated as an exact equality of graded operators, or
pointwise on a harmonic basis when it only holds there. Failures are data:
the suite never raises on a defect, it records the first differing entry.
"""
import random
from fractions import Fraction
from typing import Callable, List, Literal, Optional

from pydantic import BaseModel, ConfigDict

from ..almost_kahler import STAR_PARTNERS, AKManifold
from ..exact_algebra import I, ensure_positive_semidefinite
from ..exterior import FormValue, GradedOperator, identity_operator
from ..shared.errors import NotPositiveSemidefiniteError
from ..shared.logger import log
from .commutators import graded_commutator, joint_kernel
from .selection import laplacian_by_name, operator_by_name

# operators drawn for the graded Jacobi check
JACOBI_POOL = ("del", "dbar", "mu", "mubar", "L", "Lambda")

# (left, right, coefficient, target): [left, right] = coefficient * target, or 0
KAHLER_COMMUTATORS = [
    ("L", "mubar", None, None), ("L", "mu", None, None),
    ("Lambda", "mubar*", None, None), ("Lambda", "mu*", None, None),
    ("L", "dbar", None, None), ("L", "del", None, None),
    ("Lambda", "dbar*", None, None), ("Lambda", "del*", None, None),
    ("L", "mubar*", I, "mu"), ("L", "mu*", -I, "mubar"),
    ("Lambda", "mubar", I, "mu*"), ("Lambda", "mu", -I, "mubar*"),
    ("L", "dbar*", -I, "del"), ("L", "del*", I, "dbar"),
    ("Lambda", "dbar", -I, "del*"), ("Lambda", "del", I, "dbar*"),
]

# bidegree of each piece of d^2 = 0 and the compositions that land there
D_SQUARED = [
    ((4, -2), [("mu", "mu")]),
    ((3, -1), [("mu", "del"), ("del", "mu")]),
    ((2, 0), [("del", "del"), ("mu", "dbar"), ("dbar", "mu")]),
    ((1, 1), [("del", "dbar"), ("dbar", "del"), ("mu", "mubar"), ("mubar", "mu")]),
    ((0, 2), [("dbar", "dbar"), ("del", "mubar"), ("mubar", "del")]),
    ((-1, 3), [("mubar", "dbar"), ("dbar", "mubar")]),
    ((-2, 4), [("mubar", "mubar")]),
]

LAPLACIAN_SELECTIONS = ("d", "dLambda", "del", "dbar", "mu", "mubar", "dbar+mu", "del+mubar")


class IdentityCheck(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    anchor: str
    status: Literal["pass", "fail"]
    defect: Optional[str] = None


class IdentitySuiteReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    suite: str
    manifold: str
    seed: int
    checks: List[IdentityCheck] = []

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    @property
    def failures(self) -> List[IdentityCheck]:
        return [c for c in self.checks if c.status == "fail"]


def _zero_like(op: GradedOperator) -> GradedOperator:
    return GradedOperator("0", op.dimension, {}, op.sign, op.offset)


def _describe(defect) -> str:
    if defect[0] == "grading":
        return f"degree maps differ (offsets {defect[2]} and {defect[3]})"
    k, i, j, value = defect
    return f"degree {k}, entry ({i + 1},{j + 1}) differs by {value}"


def _coefficient_text(coefficient) -> str:
    if coefficient == I:
        return "i"
    if coefficient == -I:
        return "-i"
    return str(coefficient)


class SuiteBuilder:
    """Collects checks for one manifold and logs each verdict."""

    def __init__(self, manifold: AKManifold):
        self.manifold = manifold
        self.checks: List[IdentityCheck] = []

    def op(self, name: str) -> GradedOperator:
        return operator_by_name(self.manifold, name)

    def lap(self, selection: str) -> GradedOperator:
        return laplacian_by_name(self.manifold, selection)

    def record(self, check_id: str, anchor: str, defect: Optional[str]):
        status = "pass" if defect is None else "fail"
        self.checks.append(IdentityCheck(id=check_id, anchor=anchor, status=status, defect=defect))
        if defect is None:
            log.debug(f"{self.manifold.name}: {check_id} holds")
        else:
            log.warning(f"{self.manifold.name}: {check_id} {anchor} fails, {defect}")

    def equal(self, check_id: str, anchor: str, left: GradedOperator, right: GradedOperator):
        defect = left.first_defect(right)
        self.record(check_id, anchor, None if defect is None else _describe(defect))

    def zero(self, check_id: str, anchor: str, op: GradedOperator):
        self.equal(check_id, anchor, op, _zero_like(op))

    def pointwise(self, check_id: str, anchor: str, forms: List[FormValue],
                  left: Callable[[FormValue], FormValue], right: Callable[[FormValue], FormValue]):
        for form in forms:
            lhs, rhs = left(form), right(form)
            if lhs != rhs:
                self.record(check_id, anchor, f"at {form!r}: {lhs!r} != {rhs!r}")
                return
        self.record(check_id, anchor, None)


def kahler_identities(s: SuiteBuilder):
    for left, right, coefficient, target in KAHLER_COMMUTATORS:
        bracket = graded_commutator(s.op(left), s.op(right))
        check_id = f"kahler.{left}.{right}"
        if coefficient is None:
            s.zero(check_id, f"[{left},{right}]=0", bracket)
        else:
            s.equal(check_id, f"[{left},{right}]={_coefficient_text(coefficient)} {target}",
                    bracket, s.op(target).scale(coefficient))


def mixed_commutators(s: SuiteBuilder):
    br, op = graded_commutator, s.op
    s.zero("mixed.mubar.mu*", "[mubar,mu*]=0", br(op("mubar"), op("mu*")))
    s.zero("mixed.mu.mubar*", "[mu,mubar*]=0", br(op("mu"), op("mubar*")))
    s.equal("mixed.mubar.del*", "[mubar,del*]=[dbar,mu*]",
            br(op("mubar"), op("del*")), br(op("dbar"), op("mu*")))
    s.equal("mixed.mu.dbar*", "[mu,dbar*]=[del,mubar*]",
            br(op("mu"), op("dbar*")), br(op("del"), op("mubar*")))
    s.equal("mixed.del.dbar*", "[del,dbar*]=[mubar*,dbar]+[mu,del*]",
            br(op("del"), op("dbar*")), br(op("mubar*"), op("dbar")) + br(op("mu"), op("del*")))
    s.equal("mixed.dbar.del*", "[dbar,del*]=[mu*,del]+[mubar,dbar*]",
            br(op("dbar"), op("del*")), br(op("mu*"), op("del")) + br(op("mubar"), op("dbar*")))


def laplacian_identities(s: SuiteBuilder):
    br, op, lap = graded_commutator, s.op, s.lap
    s.equal("laplacian.mu_mubar_split", "Delta_{mubar+mu}=Delta_mubar+Delta_mu",
            lap("mubar+mu"), lap("mubar,mu"))
    s.equal("laplacian.conjugate_pairs", "Delta_dbar+Delta_mu=Delta_del+Delta_mubar",
            lap("dbar,mu"), lap("del,mubar"))
    cross = (br(op("mubar"), op("del*")) + br(op("mu"), op("dbar*"))
             + br(op("del"), op("dbar*")) + br(op("dbar"), op("del*")))
    s.equal("laplacian.d_expansion",
            "Delta_d=2(Delta_dbar+Delta_mu+[mubar,del*]+[mu,dbar*]+[del,dbar*]+[dbar,del*])",
            lap("d"), (lap("dbar,mu") + cross).scale(2))
    s.equal("laplacian.dbar_plus_mu_expansion", "Delta_{dbar+mu}=Delta_dbar+Delta_mu+[dbar,mu*]+[mu,dbar*]",
            lap("dbar+mu"), lap("dbar,mu") + br(op("dbar"), op("mu*")) + br(op("mu"), op("dbar*")))
    s.equal("laplacian.dbar_plus_mu_conjugate", "Delta_{dbar+mu}=Delta_{del+mubar}",
            lap("dbar+mu"), lap("del+mubar"))
    quarter = lap("d,dLambda").scale(Fraction(1, 4))
    s.equal("laplacian.dbar_plus_mu_quarter", "Delta_{dbar+mu}=1/4(Delta_d+Delta_dLambda)",
            lap("dbar+mu"), quarter)
    s.equal("laplacian.one_forms_quarter",
            "(Delta_dbar+Delta_mu)|1-forms=1/4(Delta_d+Delta_dLambda)|1-forms",
            lap("dbar,mu").restricted([1]), quarter.restricted([1]))


def laplacian_properties(s: SuiteBuilder):
    """Each Laplacian is self-adjoint and PSD with kernel ker op cap ker op*."""
    m = s.manifold
    for selection in LAPLACIAN_SELECTIONS:
        delta = s.lap(selection)
        terms = selection.split("+")
        base = s.op(selection)
        adjoint = s.op("+".join(f"{t}*" for t in terms))
        defect = None
        for k in range(m.dimension + 1):
            block = delta.block(k)
            try:
                ensure_positive_semidefinite(m.tower.gram(k) @ block, f"Delta_{selection} on degree {k}")
            except NotPositiveSemidefiniteError as e:
                defect = str(e)
                break
            kernel = block.nullspace()
            joint = joint_kernel(m, [base, adjoint], k)
            if len(kernel) != len(joint) or any(any(block.apply(v)) for v in joint):
                defect = f"degree {k}: dim ker Delta = {len(kernel)}, joint kernel has dimension {len(joint)}"
                break
        s.record(f"laplacian.{selection}.positive",
                 f"Delta_{selection} self-adjoint, PSD, kernel = ker {selection} cap ker {selection}*", defect)


def sl2_identities(s: SuiteBuilder):
    br, op = graded_commutator, s.op
    calc = s.manifold.calculus
    s.equal("sl2.Lambda.L", "[Lambda,L]=H", br(op("Lambda"), op("L")), op("H"))
    s.equal("sl2.H.L", "[H,L]=-2L", br(op("H"), op("L")), op("L").scale(-2))
    s.equal("sl2.H.Lambda", "[H,Lambda]=2Lambda", br(op("H"), op("Lambda")), op("Lambda").scale(2))
    s.equal("sl2.Lambda_star", "Lambda=*^-1 L *", calc.Lambda, calc.Lambda_from_star)


def symplectic_identities(s: SuiteBuilder):
    br = graded_commutator
    calc = s.manifold.calculus
    d, d_star, dl, dl_star = s.op("d"), s.op("d*"), s.op("dLambda"), s.op("dLambda*")
    L, lam = s.op("L"), s.op("Lambda")
    s.equal("dlambda.dLambda.L", "[dLambda,L]=d", br(dl, L), d)
    s.zero("dlambda.dLambda*.L", "[dLambda*,L]=0", br(dl_star, L))
    s.zero("dlambda.d.L", "[d,L]=0", br(d, L))
    s.equal("dlambda.d*.L", "[d*,L]=-dLambda*", br(d_star, L), -dl_star)
    s.zero("dlambda.dLambda.Lambda", "[dLambda,Lambda]=0", br(dl, lam))
    s.equal("dlambda.via_calJ", "dLambda=-* calJ^-1 d calJ *", dl, calc.dLambda_via_calJ)
    s.equal("dlambda.via_star_s", "dLambda=(-1)^(k+1) *s d *s", dl, calc.dLambda_via_star_s)
    s.equal("dlambda.adjoint_via_calJ", "dLambda*=calJ^-1 d calJ", dl_star, calc.dLambda_star_via_calJ)
    s.equal("dlambda.adjoint_via_commutator", "dLambda*=[L,d*]", dl_star, calc.dLambda_star_via_commutator)
    s.equal("dlambda.adjoint_via_star_s", "dLambda*=(-1)^k *s d* *s", dl_star, calc.dLambda_star_via_star_s)
    s.zero("dlambda.square", "(dLambda)^2=0", dl @ dl)
    s.zero("dlambda.anticommutes", "d dLambda + dLambda d=0", br(d, dl))
    lower = d_star @ d + dl_star @ dl
    upper = d @ d_star + dl @ dl_star
    s.zero("dlambda.lower.L", "[d*d+dLambda*dLambda,L]=0", br(lower, L))
    s.zero("dlambda.upper.L", "[dd*+dLambda dLambda*,L]=0", br(upper, L))
    s.zero("dlambda.laplacians.L", "[Delta_d+Delta_dLambda,L]=0", br(s.lap("d,dLambda"), L))
    s.zero("dlambda.lower.Lambda", "[d*d+dLambda*dLambda,Lambda]=0", br(lower, lam))


def star_identities(s: SuiteBuilder):
    calc = s.manifold.calculus
    n = s.manifold.dimension
    one = identity_operator(n)
    for name, partner in STAR_PARTNERS.items():
        s.equal(f"star.adjoint.{name}", f"{name}*=-* {partner} *", calc.adjoint(name), calc.star_adjoint(name))
    s.equal("star.hodge_square", "** = (-1)^k", calc.star @ calc.star, one.degreewise(lambda k: (-1) ** k))
    s.equal("star.symplectic_square", "*s *s = 1", calc.star_s @ calc.star_s, one)
    s.equal("star.inverse", "*^-1 * = 1", calc.star_inv @ calc.star, one)


def differential_identities(s: SuiteBuilder):
    op = s.op
    total = op("mu") + op("del") + op("dbar") + op("mubar")
    s.equal("split.sum", "mu+del+dbar+mubar=d", total, op("d"))
    s.zero("split.d_squared", "d^2=0", op("d") @ op("d"))
    for (a, b), pairs in D_SQUARED:
        composed = None
        for left, right in pairs:
            piece = op(left) @ op(right)
            composed = piece if composed is None else composed + piece
        anchor = "+".join(f"{left} {right}" for left, right in pairs) + "=0"
        s.zero(f"split.d_squared.{a},{b}", anchor, composed)
    report = s.manifold.calculus.nijenhuis
    defect = None
    if not report.factor_consistent:
        defect = "mu+mubar is not a multiple of the Nijenhuis derivation"
    elif not report.detectors_agree:
        defect = "Nijenhuis tensor and mu disagree on integrability"
    factor = "kappa" if report.factor is None else str(report.factor)
    s.record("nijenhuis.factor", f"mu+mubar={factor} N*", defect)


def lefschetz_harmonic_identities(s: SuiteBuilder):
    """[d*, L^l] and [dLambda, L^l] on harmonic bases, for 1 <= l <= n."""
    m = s.manifold
    d, d_star, dl, dl_star, L = s.op("d"), s.op("d*"), s.op("dLambda"), s.op("dLambda*"), s.op("L")
    harmonic_d, harmonic_dl = [], []
    for k in range(m.dimension + 1):
        harmonic_d += [FormValue.from_vector(m.dimension, k, v) for v in s.lap("d").block(k).nullspace()]
        harmonic_dl += [FormValue.from_vector(m.dimension, k, v) for v in s.lap("dLambda").block(k).nullspace()]
    for l in range(1, m.complex_dimension + 1):
        lower = L.power(l - 1)
        bracket_star = graded_commutator(d_star, L.power(l))
        s.pointwise(f"lefschetz.d*.L^{l}", f"[d*,L^{l}]h=-{l} L^{l - 1} dLambda* h on d-harmonic h",
                    harmonic_d, bracket_star, lambda h: lower(dl_star(h)).scale(-l))
        bracket_dl = graded_commutator(dl, L.power(l))
        s.pointwise(f"lefschetz.dLambda.L^{l}", f"[dLambda,L^{l}]b={l} L^{l - 1} d b on dLambda-harmonic b",
                    harmonic_dl, bracket_dl, lambda b: lower(d(b)).scale(l))


def jacobi_identities(s: SuiteBuilder, seed: int, triples: int):
    """Graded Jacobi identity on seeded random triples of structure operators."""
    rng = random.Random(seed)
    br = graded_commutator
    for _ in range(triples):
        names = [rng.choice(JACOBI_POOL) for _ in range(3)]
        a, b, c = (s.op(x) for x in names)

        def sign(x, y):
            return -1 if x.parity * y.parity else 1

        total = (br(a, br(b, c)).scale(sign(c, a)) + br(b, br(c, a)).scale(sign(a, b))
                 + br(c, br(a, b)).scale(sign(b, c)))
        label = ",".join(names)
        s.zero(f"jacobi.{label}", f"graded Jacobi for ({label})", total)


SUITES = [
    kahler_identities,
    mixed_commutators,
    laplacian_identities,
    laplacian_properties,
    sl2_identities,
    symplectic_identities,
    star_identities,
    differential_identities,
    lefschetz_harmonic_identities,
]


def identity_suite(m: AKManifold, seed: int = 0, jacobi_triples: int = 10) -> IdentitySuiteReport:
    """Evaluate every operator identity on ``m``; failures are recorded, not raised."""
    log.info(f"Running identity suite on {m.name}")
    builder = SuiteBuilder(m)
    for suite in SUITES:
        suite(builder)
    jacobi_identities(builder, seed, jacobi_triples)
    report = IdentitySuiteReport(suite="structure-identities", manifold=m.name, seed=seed, checks=builder.checks)
    log.info(f"Identity suite on {m.name}: {len(report.checks) - len(report.failures)}/{len(report.checks)} pass")
    return report
