"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals."""
import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Any, Dict, Union

from ..shared.errors import ManifestError


_RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")

RationalLike = Union[int, Fraction]


def parse_rational(text: Any, pointer: str = "") -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` exactly. Floats are refused."""
    if isinstance(text, bool):
        raise ManifestError(f"malformed rational {text!r}", pointer)
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_PATTERN.match(text.strip()):
        raise ManifestError(f"malformed rational {text!r}", pointer)
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise ManifestError(f"malformed rational {text!r}: zero denominator", pointer)
    return Fraction(int(num), int(den) if den else 1)


def rational_to_string(value: Fraction) -> str:
    """Canonical text: ``"p"`` when the denominator is 1, else ``"p/q"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    @staticmethod
    def coerce(value: Any) -> "GaussianRational":
        if type(value) is GaussianRational:
            return value
        if isinstance(value, (int, _RationalABC)):
            return GaussianRational(Fraction(value))
        if isinstance(value, complex):
            raise TypeError("floating-point complex values are not exact")
        raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")

    # arithmetic

    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if not other.im:
            if not self.im:
                return GaussianRational(self.re * other.re)
            return GaussianRational(self.re * other.re, self.im * other.re)
        if not self.im:
            return GaussianRational(self.re * other.re, self.re * other.im)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        norm = other.norm2()
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(other.re / norm, -other.im / norm)

    def __rtruediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return ONE / (self ** -exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # structure

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """|z|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({rational_to_string(self.re)}, {rational_to_string(self.im)})"

    def __str__(self):
        if not self.im:
            return rational_to_string(self.re)
        if not self.re:
            return f"{rational_to_string(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{rational_to_string(self.re)}{sign}{rational_to_string(abs(self.im))}i"

    def to_json(self) -> Dict[str, str]:
        return {"re": rational_to_string(self.re), "im": rational_to_string(self.im)}

    @classmethod
    def from_json(cls, data: Dict[str, str], pointer: str = "") -> "GaussianRational":
        return cls(parse_rational(data.get("re", "0"), f"{pointer}/re"),
                   parse_rational(data.get("im", "0"), f"{pointer}/im"))


def _coerce_or_none(value):
    if type(value) is GaussianRational:
        return value
    if isinstance(value, (int, _RationalABC)):
        return GaussianRational(Fraction(value))
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def i_power(k: int) -> GaussianRational:
    """sqrt(-1) ** k for any integer k."""
    return (ONE, I, -ONE, -I)[k % 4]


def gauss(value: Any) -> GaussianRational:
    return GaussianRational.coerce(value)
