"""Build-once table of every structure operator of a validated manifold."""
from functools import cached_property
from threading import Lock
from typing import Callable, Dict

from ..exterior import GradedOperator
from ..lie_algebra import ce_differential
from ..shared.logger import log
from .bigrading import cal_j_operator, dual_j_action, projection_blocks, projection_operator, split_differential
from .lefschetz import counting_operator, lefschetz_decomposition, lefschetz_operator
from .nijenhuis import NijenhuisReport, measure_factor, nijenhuis_derivation, nijenhuis_table
from .stars import gram_adjoint, hodge_star_operator, inverse_reflection, star_conjugate, symplectic_star_operator
from .structure import AKManifold, omega_matrix, top_coefficient

# adjoint partners for the star formula delta* = -* delta' *
STAR_PARTNERS = {"del": "dbar", "dbar": "del", "mu": "mubar", "mubar": "mu", "d": "d"}


class StructureCalculus:
    """Operators of a manifold, each computed on first use and then reused.

    Named operators: d, mu, del, dbar, mubar, J, L, Lambda, H, star,
    star_inv, star_s, calJ, calJ_inv, dLambda, dLambda_star. ``op(name)``
    also accepts ``name*`` for Gram adjoints.
    """

    def __init__(self, manifold: AKManifold):
        self.manifold = manifold
        self.tower = manifold.tower
        self._memo: Dict[str, object] = {}
        self._lock = Lock()

    def memo(self, key: str, factory: Callable[[], object]):
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = factory()
        with self._lock:
            return self._memo.setdefault(key, value)

    # primary operators

    @cached_property
    def d(self) -> GradedOperator:
        return ce_differential(self.manifold.algebra)

    @cached_property
    def j_action(self) -> GradedOperator:
        return dual_j_action(self.manifold)

    @cached_property
    def projections(self) -> Dict[int, Dict]:
        return projection_blocks(self.manifold, self.j_action)

    def projection(self, p: int, q: int) -> GradedOperator:
        return projection_operator(self.manifold, self.projections, p, q)

    @cached_property
    def split(self) -> Dict[str, GradedOperator]:
        parts = split_differential(self.manifold, self.d, self.projections)
        log.debug(f"{self.manifold.name}: split d into " +
                  ", ".join(f"{k}={'0' if v.is_zero() else 'nonzero'}" for k, v in parts.items()))
        return parts

    @property
    def mu(self) -> GradedOperator:
        return self.split["mu"]

    @property
    def dbar(self) -> GradedOperator:
        return self.split["dbar"]

    @property
    def mubar(self) -> GradedOperator:
        return self.split["mubar"]

    @property
    def del_(self) -> GradedOperator:
        return self.split["del"]

    @cached_property
    def nijenhuis(self) -> NijenhuisReport:
        table = nijenhuis_table(self.manifold)
        n_star = nijenhuis_derivation(self.manifold, table)
        factor, consistent = measure_factor(self.mu + self.mubar, n_star)
        return NijenhuisReport(
            table=table,
            derivation=n_star,
            factor=factor,
            factor_consistent=consistent,
            integrable=not any(any(v) for v in table.values()),
            mu_vanishes=self.mu.is_zero(),
            mubar_vanishes=self.mubar.is_zero(),
        )

    @cached_property
    def star(self) -> GradedOperator:
        return hodge_star_operator(self.tower, top_coefficient(self.manifold))

    @cached_property
    def star_inv(self) -> GradedOperator:
        return inverse_reflection(self.star, "*^-1")

    @cached_property
    def star_s(self) -> GradedOperator:
        poisson = omega_matrix(self.manifold).inverse()
        return symplectic_star_operator(poisson, top_coefficient(self.manifold))

    @cached_property
    def L(self) -> GradedOperator:
        return lefschetz_operator(self.manifold)

    @cached_property
    def Lambda(self) -> GradedOperator:
        return gram_adjoint(self.tower, self.L, "Lambda")

    @cached_property
    def Lambda_from_star(self) -> GradedOperator:
        """*^-1 L *."""
        return (self.star_inv @ self.L @ self.star).relabel("*^-1L*", (-1, -1))

    @cached_property
    def H(self) -> GradedOperator:
        return counting_operator(self.manifold)

    @cached_property
    def lefschetz_decomposition(self):
        return lefschetz_decomposition(self.manifold, self.L, self.Lambda)

    @cached_property
    def calJ(self) -> GradedOperator:
        return cal_j_operator(self.manifold, self.projections)

    @cached_property
    def calJ_inv(self) -> GradedOperator:
        return cal_j_operator(self.manifold, self.projections, inverse=True)

    # d^Lambda in its three guises

    @cached_property
    def dLambda(self) -> GradedOperator:
        """[d, Lambda] = d Lambda - Lambda d."""
        return (self.d @ self.Lambda - self.Lambda @ self.d).relabel("dLambda")

    @cached_property
    def dLambda_via_calJ(self) -> GradedOperator:
        """-* calJ^-1 d calJ *."""
        return (-(self.star @ self.calJ_inv @ self.d @ self.calJ @ self.star)).relabel("-*J^-1dJ*")

    @cached_property
    def dLambda_via_star_s(self) -> GradedOperator:
        """(-1)^{k+1} *s d *s on k-forms."""
        return (self.star_s @ self.d @ self.star_s).degreewise(lambda k: (-1) ** (k + 1), "(-1)^(k+1)*sd*s")

    @cached_property
    def dLambda_star(self) -> GradedOperator:
        return gram_adjoint(self.tower, self.dLambda, "dLambda*")

    @cached_property
    def dLambda_star_via_calJ(self) -> GradedOperator:
        return (self.calJ_inv @ self.d @ self.calJ).relabel("J^-1dJ")

    @cached_property
    def dLambda_star_via_commutator(self) -> GradedOperator:
        """[L, d*]."""
        d_star = self.adjoint("d")
        return (self.L @ d_star - d_star @ self.L).relabel("[L,d*]")

    @cached_property
    def dLambda_star_via_star_s(self) -> GradedOperator:
        """(-1)^k *s d* *s on k-forms."""
        return (self.star_s @ self.adjoint("d") @ self.star_s).degreewise(lambda k: (-1) ** k, "(-1)^k*sd**s")

    # lookup

    def op(self, name: str) -> GradedOperator:
        if name.endswith("*"):
            return self.adjoint(name[:-1])
        if name in self.split:
            return self.split[name]
        value = getattr(self, name, None)
        if not isinstance(value, GradedOperator):
            raise KeyError(f"unknown operator {name!r}")
        return value

    def adjoint(self, name: str) -> GradedOperator:
        return self.memo(f"adj:{name}", lambda: gram_adjoint(self.tower, self.op(name), f"{name}*"))

    def star_adjoint(self, name: str) -> GradedOperator:
        """-* partner *, which must equal the Gram adjoint of ``name``."""
        partner = STAR_PARTNERS[name]
        return self.memo(f"star-adj:{name}", lambda: star_conjugate(self.star, self.op(partner)))

    def del_star_variants(self) -> Dict:
        """Which star formula reproduces del*: only -* dbar * is degree-consistent."""
        short = (-(self.dbar @ self.star)).relabel("-dbar*")
        gram = self.adjoint("del")
        return {
            "formula": "-*dbar*",
            "matches": gram == self.star_adjoint("del"),
            "short_formula": "-dbar*",
            "short_is_degree_consistent": short.same_grading(gram),
        }
