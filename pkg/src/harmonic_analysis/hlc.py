"""Hard Lefschetz audit on harmonic forms.

For every degree k < n four statements are evaluated independently:

1. H^k_d = H^k_dLambda
2. L^{n-k} maps H^k_d bijectively onto H^{2n-k}_d
3. L^{n-k} maps H^k_dLambda bijectively onto H^{2n-k}_dLambda
4. H^k_d is contained in H^k_{ddLambda}

They are equivalent, so any disagreement is a ``ConsistencyError``.
"""
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Sequence

from ..almost_kahler import AKManifold
from ..exact_algebra import ExactMatrix, Vector
from ..shared.errors import ConsistencyError
from ..shared.logger import log
from .betti import invariant_betti_numbers
from .spaces import contains, harmonic_space, same_span


@dataclass
class LefschetzMap:
    """L^{n-k} restricted to one harmonic space of degree k."""

    source_dimension: int
    target_dimension: int
    rank: int
    maps_into: bool

    @property
    def bijective(self) -> bool:
        return (self.maps_into and self.rank == self.source_dimension == self.target_dimension)

    @property
    def cohomological(self) -> bool:
        """Bijective after projecting onto the target harmonic space."""
        return self.rank == self.source_dimension == self.target_dimension

    def to_json(self) -> Dict:
        return {
            "source_dimension": self.source_dimension,
            "target_dimension": self.target_dimension,
            "rank": self.rank,
            "maps_into_harmonic": self.maps_into,
        }


@dataclass
class HlcDegree:
    degree: int
    harmonic_equal: bool
    lefschetz_d: LefschetzMap
    lefschetz_dlambda: LefschetzMap
    in_ddlambda: bool

    @property
    def statements(self) -> List[bool]:
        return [self.harmonic_equal, self.lefschetz_d.bijective, self.lefschetz_dlambda.bijective, self.in_ddlambda]

    @property
    def holds(self) -> bool:
        return self.harmonic_equal

    def to_json(self) -> Dict:
        return {
            "degree": self.degree,
            "statements": self.statements,
            "rank": self.lefschetz_d.rank,
            "lefschetz_d": self.lefschetz_d.to_json(),
            "lefschetz_dLambda": self.lefschetz_dlambda.to_json(),
        }


@dataclass
class HlcReport:
    degrees: List[HlcDegree]
    non_hlc_degrees: List[int]
    angella_tomassini_degrees: List[int]
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(d.holds for d in self.degrees)

    @property
    def cohomological(self) -> bool:
        return all(d.lefschetz_d.cohomological for d in self.degrees)

    def verdicts(self) -> Dict[str, bool]:
        """HLC per degree 0 < k < n; degree 0 always holds."""
        return {f"k{d.degree}": d.holds for d in self.degrees if d.degree > 0}

    def to_json(self) -> Dict:
        return {
            "holds": self.holds,
            "cohomological": self.cohomological,
            "degrees": [d.to_json() for d in self.degrees],
            "non_hlc_degrees": self.non_hlc_degrees,
            "angella_tomassini_degrees": self.angella_tomassini_degrees,
            "checks": self.checks,
        }


def lefschetz_map(m: AKManifold, k: int, source: Sequence[Vector], target: Sequence[Vector]) -> LefschetzMap:
    """Rank of L^{n-k} from ``source`` followed by projection onto ``target``."""
    n = m.complex_dimension
    top = 2 * n - k
    size = comb(m.dimension, top)
    block = m.calculus.L.power(n - k).block(k)
    images = [block.apply(v) for v in source]
    rank = 0
    if source and target:
        t = ExactMatrix.from_columns(list(target), size)
        pairing = t.conjugate_transpose() @ m.tower.gram(top) @ ExactMatrix.from_columns(images, size)
        rank = pairing.rank()
    return LefschetzMap(source_dimension=len(source), target_dimension=len(target), rank=rank,
                        maps_into=contains(target, images, size))


def hlc_degree(m: AKManifold, k: int) -> HlcDegree:
    size = comb(m.dimension, k)
    top = 2 * m.complex_dimension - k
    h_d = harmonic_space(m, "d", k).basis
    h_dl = harmonic_space(m, "dLambda", k).basis
    degree = HlcDegree(
        degree=k,
        harmonic_equal=same_span(h_d, h_dl, size),
        lefschetz_d=lefschetz_map(m, k, h_d, harmonic_space(m, "d", top).basis),
        lefschetz_dlambda=lefschetz_map(m, k, h_dl, harmonic_space(m, "dLambda", top).basis),
        in_ddlambda=contains(harmonic_space(m, "ddLambda", k).basis, h_d, size),
    )
    if len(set(degree.statements)) != 1:
        raise ConsistencyError("HLC_EQUIVALENCE", f"the four Lefschetz statements disagree in degree {k}",
                               defect=degree.statements)
    log.debug(f"{m.name}: HLC degree {k}: {degree.holds}, rank {degree.lefschetz_d.rank}/{len(h_d)}")
    return degree


def hlc_audit(m: AKManifold) -> HlcReport:
    """Four-statement audit for k < n, non-HLC degrees and the corollaries."""
    n = m.complex_dimension
    degrees = [hlc_degree(m, k) for k in range(n)]
    betti = invariant_betti_numbers(m)
    sizes = [comb(m.dimension, k) for k in range(m.dimension + 1)]
    h_mixed = [harmonic_space(m, "d+dLambda", k).size for k in range(m.dimension + 1)]
    h_dd = [harmonic_space(m, "ddLambda", k).size for k in range(m.dimension + 1)]
    report = HlcReport(
        degrees=degrees,
        non_hlc_degrees=[2 * (h - b) for h, b in zip(h_mixed, betti)],
        angella_tomassini_degrees=[a + c - 2 * b for a, c, b in zip(h_mixed, h_dd, betti)],
    )

    h_d = [harmonic_space(m, "d", k).basis for k in range(n)]
    mixed_equal = all(same_span(harmonic_space(m, "d+dLambda", k).basis, h_d[k], sizes[k]) for k in range(n))
    dd_equal = all(same_span(harmonic_space(m, "ddLambda", k).basis, h_d[k], sizes[k]) for k in range(n))
    report.checks["one_forms_mixed_equal"] = n < 1 or same_span(
        harmonic_space(m, "d+dLambda", 1).basis, harmonic_space(m, "d", 1).basis, sizes[1])
    report.checks["hlc_implies_mixed_equal"] = not report.holds or mixed_equal
    report.checks["ddlambda_equal_iff_hlc"] = dd_equal == report.holds
    if n == 2:
        mixed_2 = same_span(harmonic_space(m, "d+dLambda", 2).basis, harmonic_space(m, "d", 2).basis, sizes[2])
        d_dl_2 = same_span(harmonic_space(m, "d", 2).basis, harmonic_space(m, "dLambda", 2).basis, sizes[2])
        report.checks["mixed_equal_implies_dlambda_equal"] = not mixed_2 or d_dl_2
    failed = [name for name, ok in report.checks.items() if not ok]
    if failed:
        raise ConsistencyError("HLC", f"Lefschetz consequences fail: {', '.join(failed)}", defect=failed)
    log.info(f"{m.name}: HLC on harmonic forms: {report.holds}")
    return report
