"""Linear operators on the exterior algebra, stored degree by degree."""
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Dict, Mapping, Optional, Tuple

from ..exact_algebra import ExactMatrix, ZERO, gauss
from ..shared.errors import ShapeMismatchError
from .forms import FormValue, basis, sort_with_sign, wedge


@dataclass(frozen=True, eq=False)
class GradedOperator:
    """Operator sending degree k to degree ``sign * k + offset``.

    ``blocks[k]`` is the matrix from the canonical basis of degree k to that
    of the target degree. Missing blocks are zero. Shift operators have
    ``sign = 1``; the stars have ``sign = -1, offset = dimension``.
    """

    label: str
    dimension: int
    blocks: Mapping[int, ExactMatrix] = field(default_factory=dict)
    sign: int = 1
    offset: int = 0
    bidegree: Optional[Tuple[int, int]] = None

    # degree bookkeeping

    def target(self, k: int) -> int:
        return self.sign * k + self.offset

    def sources(self):
        return [k for k in range(self.dimension + 1) if 0 <= self.target(k) <= self.dimension]

    @property
    def shift(self) -> int:
        if self.sign != 1:
            raise ValueError(f"{self.label} does not shift degrees uniformly")
        return self.offset

    @property
    def parity(self) -> int:
        return self.shift % 2

    def same_grading(self, other: "GradedOperator") -> bool:
        return (self.dimension, self.sign, self.offset) == (other.dimension, other.sign, other.offset)

    def block(self, k: int) -> ExactMatrix:
        found = self.blocks.get(k)
        if found is not None:
            return found
        return ExactMatrix.zeros(comb(self.dimension, self.target(k)) if 0 <= self.target(k) <= self.dimension else 0,
                                 comb(self.dimension, k))

    # algebra

    def _check(self, other: "GradedOperator"):
        if self.dimension != other.dimension:
            raise ShapeMismatchError(f"{self.label} and {other.label} act on different dimensions")

    def _combine(self, other: "GradedOperator", op: Callable, label: str) -> "GradedOperator":
        self._check(other)
        if not self.same_grading(other):
            raise ShapeMismatchError(f"{self.label} and {other.label} have different degree shifts")
        blocks = {}
        for k in self.sources():
            a, b = self.blocks.get(k), other.blocks.get(k)
            if a is None and b is None:
                continue
            blocks[k] = op(self.block(k), other.block(k))
        bidegree = self.bidegree if self.bidegree == other.bidegree else None
        return GradedOperator(label, self.dimension, blocks, self.sign, self.offset, bidegree)

    def __add__(self, other: "GradedOperator") -> "GradedOperator":
        return self._combine(other, lambda a, b: a + b, f"({self.label}+{other.label})")

    def __sub__(self, other: "GradedOperator") -> "GradedOperator":
        return self._combine(other, lambda a, b: a - b, f"({self.label}-{other.label})")

    def __neg__(self) -> "GradedOperator":
        return self.scale(-1, f"-{self.label}")

    def scale(self, factor, label: str = None) -> "GradedOperator":
        factor = gauss(factor)
        return GradedOperator(label or f"{factor}*{self.label}", self.dimension,
                              {k: m.scale(factor) for k, m in self.blocks.items()},
                              self.sign, self.offset, self.bidegree)

    def __matmul__(self, other: "GradedOperator") -> "GradedOperator":
        """Composition ``self`` after ``other``."""
        self._check(other)
        blocks = {}
        for k, inner in other.blocks.items():
            t = other.target(k)
            outer = self.blocks.get(t)
            if outer is None or not (0 <= self.target(t) <= self.dimension):
                continue
            blocks[k] = outer @ inner
        bidegree = None
        if self.bidegree is not None and other.bidegree is not None:
            bidegree = (self.bidegree[0] + other.bidegree[0], self.bidegree[1] + other.bidegree[1])
        return GradedOperator(f"{self.label}{other.label}", self.dimension, blocks,
                              self.sign * other.sign, self.sign * other.offset + self.offset, bidegree)

    def power(self, exponent: int) -> "GradedOperator":
        result = identity_operator(self.dimension)
        for _ in range(exponent):
            result = self @ result
        return GradedOperator(f"{self.label}^{exponent}", self.dimension, result.blocks,
                              result.sign, result.offset, result.bidegree)

    def degreewise(self, factor: Callable[[int], object], label: str = None) -> "GradedOperator":
        """Scale the block of source degree k by ``factor(k)``."""
        return GradedOperator(label or self.label, self.dimension,
                              {k: m.scale(gauss(factor(k))) for k, m in self.blocks.items()},
                              self.sign, self.offset, self.bidegree)

    def relabel(self, label: str, bidegree: Optional[Tuple[int, int]] = None) -> "GradedOperator":
        return GradedOperator(label, self.dimension, self.blocks, self.sign, self.offset,
                              bidegree if bidegree is not None else self.bidegree)

    def restricted(self, degrees) -> "GradedOperator":
        """Keep only the blocks whose source degree is in ``degrees``."""
        return GradedOperator(self.label, self.dimension,
                              {k: m for k, m in self.blocks.items() if k in set(degrees)},
                              self.sign, self.offset, self.bidegree)

    # evaluation

    def apply(self, form: FormValue) -> FormValue:
        if form.dimension != self.dimension:
            raise ShapeMismatchError("form and operator dimensions differ")
        result = FormValue.zero(self.dimension)
        for k in form.degrees():
            t = self.target(k)
            if not (0 <= t <= self.dimension) or k not in self.blocks:
                continue
            image = self.blocks[k].apply(form.to_vector(k))
            result = result + FormValue.from_vector(self.dimension, t, image)
        return result

    def __call__(self, form: FormValue) -> FormValue:
        return self.apply(form)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.blocks.values())

    def first_defect(self, other: "GradedOperator"):
        """First (degree, row, col, difference) where two operators disagree, or None."""
        self._check(other)
        if not self.same_grading(other):
            return ("grading", self.sign, self.offset, other.offset)
        for k in self.sources():
            a, b = self.block(k), other.block(k)
            if a == b:
                continue
            diff = a - b
            for i in range(diff.rows):
                for j in range(diff.cols):
                    if diff[i, j]:
                        return (k, i, j, diff[i, j])
        return None

    def __eq__(self, other):
        if not isinstance(other, GradedOperator):
            return NotImplemented
        return self.first_defect(other) is None

    __hash__ = None


def identity_operator(dimension: int, label: str = "1") -> GradedOperator:
    return GradedOperator(label, dimension,
                          {k: ExactMatrix.identity(comb(dimension, k)) for k in range(dimension + 1)},
                          1, 0, (0, 0))


def zero_operator(dimension: int, shift: int = 0, label: str = "0") -> GradedOperator:
    return GradedOperator(label, dimension, {}, 1, shift)


def degree_projection(dimension: int, k: int) -> GradedOperator:
    return GradedOperator(f"Pi^{k}", dimension, {k: ExactMatrix.identity(comb(dimension, k))}, 1, 0)


def from_form_map(label: str, dimension: int, image: Callable[[FormValue], FormValue],
                  sign: int = 1, offset: int = 0,
                  bidegree: Optional[Tuple[int, int]] = None) -> GradedOperator:
    """Tabulate a linear map given on basis monomials."""
    blocks = {}
    for k in range(dimension + 1):
        t = sign * k + offset
        if not (0 <= t <= dimension):
            continue
        columns = []
        for mono in basis(dimension, k):
            columns.append(image(FormValue(dimension, {mono: 1})).to_vector(t))
        matrix = ExactMatrix.from_columns(columns, comb(dimension, t))
        if not matrix.is_zero():
            blocks[k] = matrix
    return GradedOperator(label, dimension, blocks, sign, offset, bidegree)


def derivation(label: str, dimension: int, one_form_images: Mapping[int, FormValue],
               shift: int, bidegree: Optional[Tuple[int, int]] = None) -> GradedOperator:
    """Extend images of the generators alpha_i to a graded derivation.

    D(a ^ b) = Da ^ b + (-1)^(shift*|a|) a ^ Db.
    """
    parity = shift % 2
    images = {i: one_form_images.get(i, FormValue.zero(dimension)).homogeneous(1 + shift)
              for i in range(1, dimension + 1)}

    def image(form: FormValue) -> FormValue:
        (mono, coeff), = form.coefficients.items()
        out: Dict = {}
        for t, index in enumerate(mono):
            sign_t = -1 if (parity and t % 2) else 1
            for img_mono, img_coeff in images[index].coefficients.items():
                sign, sorted_mono = sort_with_sign(mono[:t] + img_mono + mono[t + 1:])
                if not sign:
                    continue
                value = img_coeff * coeff * (sign * sign_t)
                out[sorted_mono] = out.get(sorted_mono, ZERO) + value
        return FormValue(dimension, out)

    return from_form_map(label, dimension, image, 1, shift, bidegree)


def multiplication(label: str, form: FormValue, bidegree: Optional[Tuple[int, int]] = None) -> GradedOperator:
    """Left wedge multiplication by a homogeneous form."""
    degrees = form.degrees()
    shift = degrees[0] if degrees else 0
    return from_form_map(label, form.dimension, lambda x: wedge(form, x), 1, shift, bidegree)
