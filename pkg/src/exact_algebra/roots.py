"""Certified real roots of rational polynomials.

Rational roots come out exactly from the linear factors of ``factor_list``;
the remaining real roots are isolated with Sturm sequences and bisected to
the requested width.
"""
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import Poly, QQ, Rational, Symbol, sturm

from .scalars import GaussianRational, rational_to_string
from ..shared.errors import ZeroPolynomialError


_X = Symbol("x")

Coefficients = Tuple[Fraction, ...]


@dataclass(frozen=True)
class RealAlgebraicRoot:
    """A real root given exactly or by an isolating interval.

    ``factor`` is the irreducible factor the root belongs to (highest degree
    first) so the interval can be refined later.
    """

    kind: str
    multiplicity: int
    value: Optional[Fraction] = None
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    factor: Coefficients = ()

    @classmethod
    def exact(cls, value: Fraction, multiplicity: int = 1) -> "RealAlgebraicRoot":
        return cls(kind="exact", multiplicity=multiplicity, value=Fraction(value))

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    @property
    def lower(self) -> Fraction:
        return self.value if self.is_exact else self.lo

    @property
    def upper(self) -> Fraction:
        return self.value if self.is_exact else self.hi

    @property
    def is_infinite(self) -> bool:
        return False

    def sign(self) -> int:
        """Certified sign; isolating intervals never contain 0."""
        if self.is_exact:
            return (self.value > 0) - (self.value < 0)
        return 1 if self.lo >= 0 else -1

    def refine(self, width: Fraction) -> "RealAlgebraicRoot":
        if self.is_exact or self.hi - self.lo <= width:
            return self
        lo, hi = _bisect(self.factor, self.lo, self.hi, width)
        return replace(self, lo=lo, hi=hi)

    def compare(self, threshold: Fraction) -> int:
        """-1, 0 or 1 as the root is below, equal to or above ``threshold``."""
        threshold = Fraction(threshold)
        if self.is_exact:
            return (self.value > threshold) - (self.value < threshold)
        root = self
        # an irrational root never equals a rational threshold
        while root.lo <= threshold <= root.hi:
            root = root.refine((root.hi - root.lo) / 2)
        return 1 if root.lo > threshold else -1

    def as_string(self) -> str:
        if self.is_exact:
            return rational_to_string(self.value)
        return f"[{rational_to_string(self.lo)}, {rational_to_string(self.hi)}]"

    def to_json(self):
        if self.is_exact:
            return {"kind": "exact", "value": rational_to_string(self.value),
                    "multiplicity": self.multiplicity}
        return {"kind": "isolated", "lo": rational_to_string(self.lo),
                "hi": rational_to_string(self.hi), "multiplicity": self.multiplicity}


class _PositiveInfinity:
    """Sentinel for an unbounded best constant."""

    is_infinite = True
    is_exact = True

    def compare(self, threshold) -> int:
        return 1

    def sign(self) -> int:
        return 1

    def as_string(self) -> str:
        return "+inf"

    def to_json(self):
        return {"kind": "infinite", "value": "+inf", "multiplicity": 1}

    def __repr__(self):
        return "INFINITY"


INFINITY = _PositiveInfinity()


def real_coefficients(coeffs: Sequence) -> List[Fraction]:
    """Drop zero imaginary parts; refuse genuinely complex coefficients."""
    out = []
    for c in coeffs:
        if isinstance(c, GaussianRational):
            if c.im != 0:
                raise ValueError(f"coefficient {c} is not real")
            out.append(c.re)
        else:
            out.append(Fraction(c))
    return out


def _horner(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _to_fractions(poly: Poly) -> Coefficients:
    return tuple(Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs())


def _variations(sequence: Sequence[Coefficients], x: Fraction) -> int:
    signs = [s for s in (_sign(_horner(p, x)) for p in sequence) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _cauchy_bound(coeffs: Coefficients) -> Fraction:
    lead = abs(coeffs[0])
    return 1 + max(abs(c) / lead for c in coeffs[1:])


def _bisect(factor: Coefficients, lo: Fraction, hi: Fraction, width: Fraction) -> Tuple[Fraction, Fraction]:
    """Shrink an isolating interval of a squarefree factor without rational roots."""
    sign_lo = _sign(_horner(factor, lo))
    while hi - lo > width or lo < 0 < hi:
        mid = (lo + hi) / 2
        if _sign(_horner(factor, mid)) == sign_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _isolate_factor(factor: Poly, width: Fraction) -> List[Tuple[Fraction, Fraction]]:
    coeffs = _to_fractions(factor)
    sequence = [_to_fractions(p) for p in sturm(factor)]
    bound = _cauchy_bound(coeffs)
    pending = [(-bound, bound, _variations(sequence, -bound) - _variations(sequence, bound))]
    intervals = []
    while pending:
        lo, hi, count = pending.pop()
        if count == 0:
            continue
        if count == 1:
            intervals.append(_bisect(coeffs, lo, hi, width))
            continue
        mid = (lo + hi) / 2
        left = _variations(sequence, lo) - _variations(sequence, mid)
        pending.append((lo, mid, left))
        pending.append((mid, hi, count - left))
    return intervals


def _overlaps(a: RealAlgebraicRoot, b: RealAlgebraicRoot) -> bool:
    return a.lower <= b.upper and b.lower <= a.upper


def _separate(roots: List[RealAlgebraicRoot]) -> List[RealAlgebraicRoot]:
    """Refine isolating intervals until every root is apart from the others."""
    roots = list(roots)
    changed = True
    while changed:
        changed = False
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                a, b = roots[i], roots[j]
                if not _overlaps(a, b):
                    continue
                if not a.is_exact:
                    roots[i] = a.refine((a.hi - a.lo) / 2)
                if not b.is_exact:
                    roots[j] = b.refine((b.hi - b.lo) / 2)
                changed = True
    return sorted(roots, key=lambda r: r.lower)


def isolate_real_roots(coeffs: Sequence, width: Fraction) -> List[RealAlgebraicRoot]:
    """All real roots of a polynomial given highest degree first.

    Rational roots are exact; irrational ones get isolating intervals of
    width at most ``width`` that never contain zero.
    """
    width = Fraction(width)
    if width <= 0:
        raise ValueError("isolation width must be positive")
    values = real_coefficients(coeffs)
    while values and values[0] == 0:
        values.pop(0)
    if not values:
        raise ZeroPolynomialError("cannot isolate the roots of the zero polynomial")

    poly = Poly([Rational(v.numerator, v.denominator) for v in values], _X, domain=QQ)
    _, factors = poly.factor_list()

    roots = []
    for factor, multiplicity in factors:
        degree = factor.degree()
        if degree == 0:
            continue
        if degree == 1:
            a, b = _to_fractions(factor)
            roots.append(RealAlgebraicRoot.exact(-b / a, multiplicity))
            continue
        coeffs_f = _to_fractions(factor)
        for lo, hi in _isolate_factor(factor, width):
            roots.append(RealAlgebraicRoot(
                kind="isolated", multiplicity=multiplicity, lo=lo, hi=hi, factor=coeffs_f,
            ))
    return _separate(roots)


def smallest_positive(roots: Sequence[RealAlgebraicRoot]) -> Optional[RealAlgebraicRoot]:
    positive = [r for r in roots if r.sign() > 0]
    return positive[0] if positive else None
