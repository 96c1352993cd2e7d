"""Dense exact matrices over the Gaussian rationals.

Elimination, determinants, inverses and characteristic polynomials run on
sympy's ``DomainMatrix`` over ``QQ`` or ``QQ_I``.
"""
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .scalars import GaussianRational, ONE, ZERO, gauss
from ..shared.errors import NonSquareMatrixError, ShapeMismatchError


Vector = Tuple[GaussianRational, ...]


class ExactMatrix:
    """Immutable rectangular matrix with GaussianRational entries.

    Products skip zero entries; the matrices built by the engine are sparse
    even though they are stored densely.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: int = None):
        rows = tuple(tuple(gauss(x) for x in row) for row in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ShapeMismatchError(f"ragged row of length {len(row)}, expected {cols}")
        self._data = rows
        self.rows = len(rows)
        self.cols = cols

    @classmethod
    def _wrap(cls, rows: Tuple[Vector, ...], cols: int) -> "ExactMatrix":
        m = cls.__new__(cls)
        m._data = rows
        m.rows = len(rows)
        m.cols = cols
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        zero_row = (ZERO,) * cols
        return cls._wrap(tuple(zero_row for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls._wrap(
            tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def diagonal(cls, values: Sequence) -> "ExactMatrix":
        n = len(values)
        return cls._wrap(
            tuple(tuple(gauss(values[i]) if i == j else ZERO for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int = None) -> "ExactMatrix":
        if not columns:
            return cls.zeros(rows or 0, 0)
        n = len(columns[0])
        return cls._wrap(
            tuple(tuple(gauss(c[i]) for c in columns) for i in range(n)), len(columns)
        )

    @classmethod
    def vstack(cls, blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        cols = blocks[0].cols
        data = []
        for block in blocks:
            if block.cols != cols:
                raise ShapeMismatchError("vstack of blocks with different column counts")
            data.extend(block._data)
        return cls._wrap(tuple(data), cols)

    @classmethod
    def hstack(cls, blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise ShapeMismatchError("hstack of blocks with different row counts")
        data = tuple(sum((b._data[i] for b in blocks), ()) for i in range(rows))
        return cls._wrap(data, sum(b.cols for b in blocks))

    # access

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index):
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._data)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> List[List[GaussianRational]]:
        return [list(row) for row in self._data]

    # arithmetic

    def _check_same_shape(self, other: "ExactMatrix", op: str):
        if self.shape != other.shape:
            raise ShapeMismatchError(f"{op} of {self.shape} and {other.shape} matrices")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other, "sum")
        return ExactMatrix._wrap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other, "difference")
        return ExactMatrix._wrap(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._wrap(tuple(tuple(-a for a in r) for r in self._data), self.cols)

    def scale(self, factor) -> "ExactMatrix":
        factor = gauss(factor)
        if not factor:
            return ExactMatrix.zeros(self.rows, self.cols)
        return ExactMatrix._wrap(
            tuple(tuple(a * factor if a else ZERO for a in r) for r in self._data), self.cols
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ShapeMismatchError(f"product of {self.shape} and {other.shape} matrices")
        n = other.cols
        other_rows = other._data
        out = []
        for row in self._data:
            acc = [ZERO] * n
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in enumerate(other_rows[k]):
                    if b:
                        acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return ExactMatrix._wrap(tuple(out), n)

    def apply(self, vector: Sequence) -> Vector:
        if len(vector) != self.cols:
            raise ShapeMismatchError(f"vector of length {len(vector)} for {self.shape} matrix")
        out = []
        for row in self._data:
            acc = ZERO
            for a, x in zip(row, vector):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "ExactMatrix":
        if not self.rows:
            return ExactMatrix.zeros(self.cols, 0)
        return ExactMatrix._wrap(tuple(tuple(col) for col in zip(*self._data)), self.rows)

    def conjugate_transpose(self) -> "ExactMatrix":
        if not self.rows:
            return ExactMatrix.zeros(self.cols, 0)
        return ExactMatrix._wrap(
            tuple(tuple(a.conjugate() for a in col) for col in zip(*self._data)), self.rows
        )

    def conjugate(self) -> "ExactMatrix":
        return ExactMatrix._wrap(tuple(tuple(a.conjugate() for a in r) for r in self._data), self.cols)

    def is_zero(self) -> bool:
        return not any(a for row in self._data for a in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def trace(self) -> GaussianRational:
        if not self.is_square():
            raise NonSquareMatrixError("trace of non-square matrix")
        total = ZERO
        for i in range(self.rows):
            total = total + self._data[i][i]
        return total

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    __hash__ = None

    def __repr__(self):
        body = "; ".join(", ".join(str(a) for a in row) for row in self._data)
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"

    # elimination

    def _domain_matrix(self) -> DomainMatrix:
        """This matrix over ``QQ``, or ``QQ_I`` when some entry is not real."""
        if all(not a.im for row in self._data for a in row):
            rows = [[QQ(a.re.numerator, a.re.denominator) for a in row] for row in self._data]
            return DomainMatrix(rows, self.shape, QQ)
        rows = [[_to_qq_i(a) for a in row] for row in self._data]
        return DomainMatrix(rows, self.shape, QQ_I)

    @classmethod
    def _from_domain_matrix(cls, dm: DomainMatrix) -> "ExactMatrix":
        _, cols = dm.shape
        convert = _from_domain_element(dm.domain)
        return cls._wrap(tuple(tuple(convert(a) for a in row) for row in dm.to_list()), cols)

    def rref(self) -> Tuple["ExactMatrix", List[int]]:
        """Reduced row echelon form and pivot columns."""
        if not self.rows or not self.cols:
            return self, []
        reduced, pivots = self._domain_matrix().rref()
        return ExactMatrix._from_domain_matrix(reduced), list(pivots)

    def rank(self) -> int:
        if not self.rows or not self.cols:
            return 0
        return self._domain_matrix().rank()

    def nullspace(self) -> List[Vector]:
        """Canonical free-variable basis of the kernel, read off the RREF."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for f in free:
            v = [ZERO] * self.cols
            v[f] = ONE
            for i, p in enumerate(pivots):
                entry = reduced[i, f]
                if entry:
                    v[p] = -entry
            basis.append(tuple(v))
        return basis

    def determinant(self) -> GaussianRational:
        if not self.is_square():
            raise NonSquareMatrixError("determinant of non-square matrix")
        if not self.rows:
            return ONE
        dm = self._domain_matrix()
        return _from_domain_element(dm.domain)(dm.det())

    def inverse(self) -> "ExactMatrix":
        if not self.is_square():
            raise NonSquareMatrixError("inverse of non-square matrix")
        if not self.rows:
            return self
        try:
            return ExactMatrix._from_domain_matrix(self._domain_matrix().inv())
        except DMNonInvertibleMatrixError:
            raise ZeroDivisionError("singular matrix")

    def solve(self, rhs: "ExactMatrix") -> "ExactMatrix":
        """Solve ``self @ X = rhs`` for square invertible ``self``."""
        if not self.is_square():
            raise NonSquareMatrixError("solve with non-square matrix")
        if rhs.rows != self.rows:
            raise ShapeMismatchError("right-hand side has the wrong number of rows")
        return self.inverse() @ rhs

    def char_poly(self) -> List[GaussianRational]:
        """Coefficients of det(xI - self), highest degree first."""
        if not self.is_square():
            raise NonSquareMatrixError("charpoly of non-square matrix")
        if not self.rows:
            return [ONE]
        dm = self._domain_matrix()
        convert = _from_domain_element(dm.domain)
        return [convert(c) for c in dm.charpoly()]


def _to_qq_i(value: GaussianRational):
    re, im = value.re, value.im
    return QQ_I(QQ(re.numerator, re.denominator), QQ(im.numerator, im.denominator))


def _fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _from_domain_element(domain):
    if domain == QQ_I:
        return lambda z: GaussianRational(_fraction(z.x), _fraction(z.y))
    return lambda q: GaussianRational(_fraction(q))


def nullspace(m: ExactMatrix) -> List[Vector]:
    return m.nullspace()


def char_poly(m: ExactMatrix) -> List[GaussianRational]:
    return m.char_poly()


def column_space(m: ExactMatrix) -> List[Vector]:
    """Pivot columns of ``m``: a basis of its image."""
    _, pivots = m.rref()
    return [m.column(j) for j in pivots]


def span_rank(vectors: Sequence[Sequence], length: int) -> int:
    if not vectors:
        return 0
    return ExactMatrix.from_columns(list(vectors), length).rank()
