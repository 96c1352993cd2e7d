"""Decompose one form by bidegree, by the d-Hodge splitting and by Lefschetz pieces."""
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List

from ..almost_kahler import AKManifold, bidegree_parts
from ..exact_algebra import ExactMatrix, column_space
from ..exterior import FormValue
from ..shared.errors import ConsistencyError
from .spaces import harmonic_space, orthogonal_projection


@dataclass
class DegreeDecomposition:
    degree: int
    bidegrees: Dict[str, FormValue]
    harmonic: FormValue
    exact: FormValue
    coexact: FormValue
    lefschetz: List[Dict] = field(default_factory=list)

    def to_json(self) -> Dict:
        return {
            "degree": self.degree,
            "bidegrees": {pq: f.to_json() for pq, f in self.bidegrees.items()},
            "hodge": {"harmonic": self.harmonic.to_json(), "exact": self.exact.to_json(),
                      "coexact": self.coexact.to_json()},
            "lefschetz": [{"r": p["r"], "primitive": p["primitive"].to_json(), "piece": p["piece"].to_json()}
                          for p in self.lefschetz],
        }


@dataclass
class FormDecomposition:
    form: FormValue
    degrees: List[DegreeDecomposition]

    def to_json(self) -> Dict:
        return {"form": self.form.to_json(), "degrees": [d.to_json() for d in self.degrees]}


def lefschetz_pieces(m: AKManifold, form: FormValue, k: int) -> List[Dict]:
    """alpha = sum_r L^r beta_r with each beta_r primitive of degree k - 2r."""
    n = m.complex_dimension
    size = comb(m.dimension, k)
    calc = m.calculus
    layout, columns = [], []
    for r in range(k // 2 + 1):
        j = k - 2 * r
        if j > n or r > n - j:
            continue
        primitive = calc.Lambda.block(j).nullspace()
        if not primitive:
            continue
        power = calc.L.power(r).block(j)
        layout.append((r, j, primitive, len(columns)))
        columns.extend(power.apply(v) for v in primitive)
    if not columns:
        return []
    system = ExactMatrix.from_columns(columns, size)
    coeffs = system.solve(ExactMatrix.from_columns([form.to_vector(k)], size)).column(0)
    pieces = []
    for r, j, primitive, start in layout:
        beta = ExactMatrix.from_columns(primitive, comb(m.dimension, j)).apply(coeffs[start:start + len(primitive)])
        beta_form = FormValue.from_vector(m.dimension, j, beta)
        if beta_form.is_zero():
            continue
        pieces.append({"r": r, "primitive": beta_form, "piece": calc.L.power(r)(beta_form)})
    return pieces


def decompose_degree(m: AKManifold, form: FormValue, k: int) -> DegreeDecomposition:
    calc = m.calculus
    vector = form.to_vector(k)
    exact_basis = column_space(calc.d.block(k - 1)) if k > 0 else []
    coexact_basis = column_space(calc.adjoint("d").block(k + 1)) if k < m.dimension else []
    parts = {}
    for name, basis in (("harmonic", harmonic_space(m, "d", k).basis), ("exact", exact_basis),
                        ("coexact", coexact_basis)):
        parts[name] = FormValue.from_vector(m.dimension, k, orthogonal_projection(m, k, list(basis), vector))
    homogeneous = form.homogeneous(k)
    if parts["harmonic"] + parts["exact"] + parts["coexact"] != homogeneous:
        raise ConsistencyError("HODGE_SPLIT", f"harmonic + exact + coexact does not recover the degree-{k} part")
    pieces = lefschetz_pieces(m, homogeneous, k)
    total = FormValue.zero(m.dimension)
    for piece in pieces:
        total = total + piece["piece"]
    if total != homogeneous:
        raise ConsistencyError("LEFSCHETZ_SPLIT", f"Lefschetz pieces do not recover the degree-{k} part")
    bidegrees = {f"{p},{q}": part for (p, q), part in sorted(bidegree_parts(homogeneous, calc.projections).items())}
    return DegreeDecomposition(degree=k, bidegrees=bidegrees, harmonic=parts["harmonic"], exact=parts["exact"],
                               coexact=parts["coexact"], lefschetz=pieces)


def decompose_form(m: AKManifold, form: FormValue) -> FormDecomposition:
    """Every homogeneous component of ``form`` decomposed three ways."""
    return FormDecomposition(form=form, degrees=[decompose_degree(m, form, k) for k in form.degrees()])
