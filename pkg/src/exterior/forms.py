"""Monomials and forms of the exterior algebra on an n-dimensional dual space."""
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..exact_algebra import GaussianRational, ZERO, gauss
from ..shared.errors import ManifestError, ShapeMismatchError


class IndexMonomial(tuple):
    """Strictly increasing 1-based indices; ``(1, 3)`` stands for e1^e3."""

    def __new__(cls, indices: Iterable[int] = ()):
        indices = tuple(indices)
        for a, b in zip(indices, indices[1:]):
            if a >= b:
                raise ValueError(f"monomial indices must increase strictly: {indices}")
        if indices and indices[0] < 1:
            raise ValueError(f"monomial indices are 1-based: {indices}")
        return super().__new__(cls, indices)

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def key(self) -> str:
        return "^".join(f"e{i}" for i in self) if self else "1"

    @classmethod
    def parse(cls, key: str, pointer: str = "") -> "IndexMonomial":
        if key == "1":
            return cls(())
        try:
            parts = [int(p[1:]) for p in key.split("^") if p.startswith("e")]
            if len(parts) != len(key.split("^")):
                raise ValueError
            return cls(parts)
        except ValueError:
            raise ManifestError(f"malformed monomial key {key!r}", pointer)

    def __repr__(self):
        return self.key


def sort_with_sign(indices: Sequence[int]) -> Tuple[int, Optional[IndexMonomial]]:
    """Sign of the permutation sorting ``indices``; 0 when an index repeats."""
    if len(set(indices)) != len(indices):
        return 0, None
    inversions = sum(1 for i in range(len(indices)) for j in range(i + 1, len(indices))
                     if indices[i] > indices[j])
    return (-1 if inversions % 2 else 1), IndexMonomial(sorted(indices))


@lru_cache(maxsize=None)
def basis(n: int, k: int) -> Tuple[IndexMonomial, ...]:
    """Canonical lexicographic basis of the degree-k part."""
    if k < 0 or k > n:
        return ()
    return tuple(IndexMonomial(c) for c in combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def basis_index(n: int, k: int) -> Dict[IndexMonomial, int]:
    return {m: i for i, m in enumerate(basis(n, k))}


def complement(n: int, monomial: IndexMonomial) -> IndexMonomial:
    present = set(monomial)
    return IndexMonomial(i for i in range(1, n + 1) if i not in present)


class FormValue:
    """Sparse, possibly inhomogeneous form with Gaussian rational coefficients."""

    __slots__ = ("dimension", "coefficients")

    def __init__(self, dimension: int, coefficients: Optional[Mapping] = None):
        clean = {}
        for mono, coeff in (coefficients or {}).items():
            mono = mono if isinstance(mono, IndexMonomial) else IndexMonomial(mono)
            if mono and mono[-1] > dimension:
                raise ShapeMismatchError(f"monomial {mono.key} exceeds dimension {dimension}")
            coeff = gauss(coeff)
            if coeff:
                clean[mono] = clean.get(mono, ZERO) + coeff
                if not clean[mono]:
                    del clean[mono]
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "coefficients", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FormValue is immutable")

    @classmethod
    def zero(cls, dimension: int) -> "FormValue":
        return cls(dimension)

    @classmethod
    def one(cls, dimension: int) -> "FormValue":
        return cls(dimension, {IndexMonomial(): 1})

    @classmethod
    def generator(cls, dimension: int, i: int) -> "FormValue":
        """The 1-form alpha_i."""
        return cls(dimension, {IndexMonomial((i,)): 1})

    @classmethod
    def monomial(cls, dimension: int, indices: Sequence[int], coeff=1) -> "FormValue":
        sign, mono = sort_with_sign(list(indices))
        if not sign:
            return cls(dimension)
        return cls(dimension, {mono: gauss(coeff) * sign})

    @classmethod
    def from_vector(cls, dimension: int, k: int, vector: Sequence) -> "FormValue":
        return cls(dimension, {m: c for m, c in zip(basis(dimension, k), vector) if c})

    def to_vector(self, k: int) -> Tuple[GaussianRational, ...]:
        return tuple(self.coefficients.get(m, ZERO) for m in basis(self.dimension, k))

    # structure

    def degrees(self) -> List[int]:
        return sorted({m.degree for m in self.coefficients})

    def homogeneous(self, k: int) -> "FormValue":
        return FormValue(self.dimension, {m: c for m, c in self.coefficients.items() if m.degree == k})

    def is_zero(self) -> bool:
        return not self.coefficients

    def conjugate(self) -> "FormValue":
        return FormValue(self.dimension, {m: c.conjugate() for m, c in self.coefficients.items()})

    def real_part(self) -> "FormValue":
        return FormValue(self.dimension, {m: c.re for m, c in self.coefficients.items()})

    def imaginary_part(self) -> "FormValue":
        return FormValue(self.dimension, {m: c.im for m, c in self.coefficients.items()})

    def _check(self, other: "FormValue"):
        if self.dimension != other.dimension:
            raise ShapeMismatchError(f"forms of dimension {self.dimension} and {other.dimension}")

    def __add__(self, other: "FormValue") -> "FormValue":
        self._check(other)
        merged = dict(self.coefficients)
        for m, c in other.coefficients.items():
            merged[m] = merged.get(m, ZERO) + c
        return FormValue(self.dimension, merged)

    def __sub__(self, other: "FormValue") -> "FormValue":
        return self + (-other)

    def __neg__(self) -> "FormValue":
        return FormValue(self.dimension, {m: -c for m, c in self.coefficients.items()})

    def scale(self, factor) -> "FormValue":
        factor = gauss(factor)
        return FormValue(self.dimension, {m: c * factor for m, c in self.coefficients.items()})

    def __rmul__(self, factor) -> "FormValue":
        return self.scale(factor)

    def __xor__(self, other: "FormValue") -> "FormValue":
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, FormValue):
            return NotImplemented
        return self.dimension == other.dimension and self.coefficients == other.coefficients

    __hash__ = None

    def __repr__(self):
        if not self.coefficients:
            return "0"
        terms = [f"({c})*{m.key}" for m, c in sorted(self.coefficients.items(),
                                                  key=lambda mc: (mc[0].degree, tuple(mc[0])))]
        return " + ".join(terms)

    def to_json(self) -> Dict[str, Dict[str, str]]:
        ordered = sorted(self.coefficients.items(), key=lambda mc: (mc[0].degree, tuple(mc[0])))
        return {m.key: c.to_json() for m, c in ordered}

    @classmethod
    def from_json(cls, dimension: int, data: Mapping[str, Mapping[str, str]], pointer: str = "") -> "FormValue":
        coeffs = {}
        for key, value in data.items():
            mono = IndexMonomial.parse(key, f"{pointer}/{key}")
            coeffs[mono] = GaussianRational.from_json(value, f"{pointer}/{key}")
        return cls(dimension, coeffs)


def wedge(a: FormValue, b: FormValue) -> FormValue:
    """Exterior product; bilinear, associative and graded-commutative."""
    a._check(b)
    out: Dict[IndexMonomial, GaussianRational] = {}
    for ma, ca in a.coefficients.items():
        for mb, cb in b.coefficients.items():
            sign, mono = sort_with_sign(ma + mb)
            if not sign:
                continue
            term = ca * cb
            out[mono] = out.get(mono, ZERO) + (term if sign > 0 else -term)
    return FormValue(a.dimension, out)


def wedge_power(a: FormValue, k: int) -> FormValue:
    result = FormValue.one(a.dimension)
    for _ in range(k):
        result = wedge(result, a)
    return result
