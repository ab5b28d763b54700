"""
Exact scalars over Q and GF(p), dense matrices and canonical subspaces.

Raw field values are ``fractions.Fraction`` for the rationals and ``int`` residues in ``[0, p)``
for prime fields. Matrices and subspaces store raw values; ``Scalar`` wraps a raw value with its
field for the public arithmetic API. Elimination, inverses and kernels go through sympy's
``DomainMatrix`` over ``QQ`` or ``GF(p)``.
"""

import logging
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import sympy as sp
from pydantic import ConfigDict, model_validator
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .exceptions import (
    AmbientMismatchError,
    DivisionByZeroError,
    FieldMismatchError,
    InfiniteFieldError,
    InvalidFieldError,
    InvalidScalarError,
    SingularMatrixError,
)
from .models import _Base
from .models.enums import FieldKind, ScalarOp, SubspaceOp

log = logging.getLogger("leibniz.exact")

Raw = Union[Fraction, int]
Vector = Tuple[Raw, ...]

MAX_PRIME = 2**31

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")
_RESIDUE_RE = re.compile(r"^\d+$")


@lru_cache(maxsize=None)
def _sympy_domain(p: Optional[int]):
    return sp.QQ if p is None else sp.GF(p)


class FieldDescriptor(_Base):
    """The rationals, or the prime field GF(p) with 2 <= p < 2**31."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: FieldKind
    p: Optional[int] = None

    @model_validator(mode="after")
    def _check_modulus(self) -> "FieldDescriptor":
        if self.kind is FieldKind.rationals:
            if self.p is not None:
                raise InvalidFieldError("The rational field takes no modulus")
            return self
        if self.p is None:
            raise InvalidFieldError("A prime field needs a modulus p")
        if not 2 <= self.p < MAX_PRIME:
            raise InvalidFieldError(f"Modulus {self.p} is outside [2, 2**31)")
        if not sp.isprime(self.p):
            raise InvalidFieldError(f"Modulus {self.p} is not prime")
        return self

    @classmethod
    def parse(cls, text: str) -> "FieldDescriptor":
        """Parse the command line syntax ``Q`` or ``GF:p``."""
        text = text.strip()
        if text.upper() == "Q":
            return QQ
        head, sep, tail = text.partition(":")
        if head.upper() != "GF" or not sep or not tail.strip().isdigit():
            raise InvalidFieldError(f"Field must be 'Q' or 'GF:p', got {text!r}")
        return GF(int(tail))

    def canonical(self) -> "FieldDescriptor":
        """The shared cached instance describing the same field."""
        return QQ if self.p is None else GF(self.p)

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def order(self) -> int:
        if self.p is None:
            raise InfiniteFieldError("The rational field is infinite")
        return self.p

    @property
    def zero(self) -> Raw:
        return 0 if self.p else Fraction(0)

    @property
    def one(self) -> Raw:
        return 1 if self.p else Fraction(1)

    def elements(self) -> List[int]:
        """All residues ``0..p-1`` in order."""
        return list(range(self.order))

    @property
    def domain(self):
        """The sympy ground domain, ``QQ`` or ``GF(p)``."""
        return _sympy_domain(self.p)

    def to_domain(self, x: Raw):
        if self.p is None:
            return sp.QQ(x.numerator, x.denominator)
        return self.domain(x)

    def from_domain(self, x) -> Raw:
        if self.p is None:
            return Fraction(int(sp.QQ.numer(x)), int(sp.QQ.denom(x)))
        # sympy residues are symmetric
        return self.domain.to_int(x) % self.p

    def coerce(self, value) -> Raw:
        """Bring an int, Fraction, Scalar or scalar literal into canonical raw form."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"Scalar over {value.field} used over {self}")
            return value.value
        if isinstance(value, str):
            return self.parse_value(value)
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise InvalidScalarError(f"Cannot use {value!r} as an exact scalar")
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZeroError(f"Denominator of {value} vanishes in {self}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return value % self.p

    def parse_value(self, text: str) -> Raw:
        text = text.strip()
        if self.p is None:
            match = _RATIONAL_RE.match(text)
            if not match:
                raise InvalidScalarError(f"Not a rational literal: {text!r}")
            den = int(match.group(2)) if match.group(2) is not None else 1
            if den == 0:
                raise InvalidScalarError(f"Zero denominator in {text!r}")
            return Fraction(int(match.group(1)), den)
        negate = text.startswith("-")
        digits = text[1:] if negate else text
        if not _RESIDUE_RE.match(digits):
            raise InvalidScalarError(f"Not a residue literal for {self}: {text!r}")
        value = int(digits)
        if value >= self.p:
            raise InvalidScalarError(f"Residue {value} is not below {self.p}")
        return self.neg(value) if negate else value

    def format_value(self, x: Raw) -> str:
        if self.p is None:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(x)

    def signed(self, x: Raw) -> Raw:
        """Symmetric representative, used for display: residues above p/2 become negative."""
        if self.p is not None and x > self.p // 2:
            return x - self.p
        return x

    def add(self, x: Raw, y: Raw) -> Raw:
        return (x + y) % self.p if self.p else x + y

    def sub(self, x: Raw, y: Raw) -> Raw:
        return (x - y) % self.p if self.p else x - y

    def mul(self, x: Raw, y: Raw) -> Raw:
        return x * y % self.p if self.p else x * y

    def neg(self, x: Raw) -> Raw:
        return -x % self.p if self.p else -x

    def inv(self, x: Raw) -> Raw:
        if x == 0:
            raise DivisionByZeroError(f"Zero has no inverse in {self}")
        return pow(x, -1, self.p) if self.p else 1 / x

    def div(self, x: Raw, y: Raw) -> Raw:
        return self.mul(x, self.inv(y))

    def power(self, x: Raw, k: int) -> Raw:
        if k < 0:
            return self.power(self.inv(x), -k)
        return pow(x, k, self.p) if self.p else x**k

    def dot(self, xs: Iterable[Raw], ys: Iterable[Raw]) -> Raw:
        total = sum(x * y for x, y in zip(xs, ys))
        return total % self.p if self.p else Fraction(total)

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"


QQ = FieldDescriptor(kind=FieldKind.rationals)


@lru_cache(maxsize=None)
def GF(p: int) -> FieldDescriptor:
    return FieldDescriptor(kind=FieldKind.prime, p=p)


class Scalar:
    """An element of a field in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldDescriptor, value=0):
        self.field = field
        self.value = field.coerce(value)

    @classmethod
    def parse(cls, field: FieldDescriptor, text: str) -> "Scalar":
        return cls(field, field.parse_value(text))

    def _other(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"Cannot combine {self.field} and {other.field} scalars")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other) -> "Scalar":
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other) -> "Scalar":
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other) -> "Scalar":
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self) -> "Scalar":
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, k: int) -> "Scalar":
        return Scalar(self.field, self.field.power(self.value, k))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self.value == self.field.coerce(other)
            except DivisionByZeroError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

    def __str__(self) -> str:
        return self.field.format_value(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.field}, {self})"


def scalar_arithmetic(op: Union[ScalarOp, str], x: Scalar, y: Optional[Scalar] = None) -> Scalar:
    """
    Apply one field operation.

    Args:
        op (ScalarOp): add, mul, neg or inv.
        x (Scalar): first operand.
        y (Scalar, optional): second operand for the binary operations.

    Raises:
        FieldMismatchError: the operands live in different fields.
        DivisionByZeroError: inverting zero.
    """
    op = ScalarOp(op)
    if op in (ScalarOp.add, ScalarOp.mul):
        if y is None:
            raise InvalidScalarError(f"{op.value} needs two operands")
        return x + y if op is ScalarOp.add else x * y
    if op is ScalarOp.neg:
        return -x
    return x.inverse()


class Matrix:
    """Dense immutable matrix of raw values over one field. Zero-row matrices are allowed."""

    __slots__ = ("field", "rows", "cols", "_grid")

    def __init__(self, field: FieldDescriptor, entries: Iterable[Iterable], cols: Optional[int] = None):
        grid = tuple(tuple(field.coerce(x) for x in row) for row in entries)
        if grid:
            cols = len(grid[0])
            if any(len(row) != cols for row in grid):
                raise AmbientMismatchError("Matrix rows have different lengths")
        elif cols is None:
            raise AmbientMismatchError("An empty matrix needs an explicit column count")
        self.field = field
        self.rows = len(grid)
        self.cols = cols
        self._grid = grid

    @classmethod
    def _raw(cls, field: FieldDescriptor, grid: Sequence[Sequence[Raw]], cols: int) -> "Matrix":
        m = cls.__new__(cls)
        m.field = field
        m._grid = tuple(tuple(row) for row in grid)
        m.rows = len(m._grid)
        m.cols = cols
        return m

    @classmethod
    def zeros(cls, field: FieldDescriptor, rows: int, cols: int) -> "Matrix":
        return cls._raw(field, [[field.zero] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, field: FieldDescriptor, n: int) -> "Matrix":
        return cls._raw(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, field: FieldDescriptor, columns: Sequence[Sequence], rows: Optional[int] = None) -> "Matrix":
        columns = [[field.coerce(x) for x in col] for col in columns]
        nrows = len(columns[0]) if columns else (rows or 0)
        return cls._raw(field, [[col[i] for col in columns] for i in range(nrows)], len(columns))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def grid(self) -> Tuple[Vector, ...]:
        return self._grid

    def row(self, i: int) -> Vector:
        return self._grid[i]

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self._grid)

    def columns(self) -> List[Vector]:
        return [self.col(j) for j in range(self.cols)]

    def flat(self) -> Vector:
        return tuple(x for row in self._grid for x in row)

    def scalar(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, self._grid[i][j])

    def __getitem__(self, index: Tuple[int, int]) -> Raw:
        i, j = index
        return self._grid[i][j]

    def __iter__(self) -> Iterator[Vector]:
        return iter(self._grid)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.field == other.field and self._grid == other._grid

    def __hash__(self) -> int:
        return hash((self.field.p, self.cols, self._grid))

    def _check(self, other: "Matrix") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"Cannot combine matrices over {self.field} and {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise AmbientMismatchError(f"Shapes {self.shape} and {other.shape} differ")
        add = self.field.add
        return Matrix._raw(self.field, [[add(x, y) for x, y in zip(r, s)] for r, s in zip(self, other)], self.cols)

    def __neg__(self) -> "Matrix":
        return self.scale(self.field.neg(self.field.one))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        mul = self.field.mul
        return Matrix._raw(self.field, [[mul(c, x) for x in row] for row in self], self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        if self.cols != other.rows:
            raise AmbientMismatchError(f"Cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        dot = self.field.dot
        return Matrix._raw(self.field, [[dot(row, col) for col in cols] for row in self], other.cols)

    def apply(self, vector: Sequence) -> Vector:
        """Image of a coordinate vector, ``M v``."""
        if len(vector) != self.cols:
            raise AmbientMismatchError(f"Vector of length {len(vector)} for {self.cols} columns")
        vector = [self.field.coerce(x) for x in vector]
        return tuple(self.field.dot(row, vector) for row in self)

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, self.columns(), self.rows)

    T = property(transpose)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square:
            raise AmbientMismatchError("Only square matrices have powers")
        base = self if k >= 0 else self.inverse()
        result = Matrix.identity(self.field, self.rows)
        k = abs(k)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def block(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(self.field, [[self._grid[i][j] for j in cols] for i in rows], len(cols))

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.cols:
            raise AmbientMismatchError(f"Cannot stack {self.cols} and {other.cols} columns")
        return Matrix._raw(self.field, self._grid + other._grid, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for row in self for x in row)

    def rref(self) -> Tuple["Matrix", int, Tuple[int, ...]]:
        return rref(self)

    def rank(self) -> int:
        return rref(self)[1]

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.rows

    def inverse(self) -> "Matrix":
        return mat_inverse(self)

    def kernel(self) -> "Subspace":
        return kernel(self)

    def text_rows(self) -> List[List[str]]:
        return [[self.field.format_value(x) for x in row] for row in self]

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {self.text_rows()})"


def _domain_matrix(field: FieldDescriptor, rows: Sequence[Sequence[Raw]], ncols: int) -> DomainMatrix:
    to_domain = field.to_domain
    return DomainMatrix([[to_domain(x) for x in row] for row in rows], (len(rows), ncols), field.domain)


def _raw_rows(field: FieldDescriptor, dm: DomainMatrix) -> List[List[Raw]]:
    from_domain = field.from_domain
    return [[from_domain(x) for x in row] for row in dm.to_list()]


def _reduce_rows(field: FieldDescriptor, rows: List[List[Raw]], ncols: int) -> Tuple[List[List[Raw]], List[int]]:
    # pivot columns of the unique RREF
    if not rows or ncols == 0:
        return [list(row) for row in rows], []
    reduced, pivots = _domain_matrix(field, rows, ncols).rref()
    return _raw_rows(field, reduced), list(pivots)


def rref(m: Matrix) -> Tuple[Matrix, int, Tuple[int, ...]]:
    """
    Reduced row echelon form.

    Returns:
        tuple: the RREF matrix (same shape), the rank and the 0-based pivot columns.
    """
    rows, pivots = _reduce_rows(m.field, [list(row) for row in m], m.cols)
    return Matrix._raw(m.field, rows, m.cols), len(pivots), tuple(pivots)


def mat_inverse(m: Matrix) -> Matrix:
    """
    Inverse over the matrix field.

    Raises:
        AmbientMismatchError: m is not square.
        SingularMatrixError: rank below n.
    """
    if not m.is_square:
        raise AmbientMismatchError(f"Cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return m
    try:
        inverse = _domain_matrix(m.field, m.grid, n).inv()
    except (DMNonInvertibleMatrixError, ZeroDivisionError):
        raise SingularMatrixError(f"Matrix has rank {m.rank()} < {n}")
    return Matrix._raw(m.field, _raw_rows(m.field, inverse), n)


def solve(m: Matrix, b: Sequence) -> Optional[Vector]:
    """A solution of ``m x = b`` with free variables set to zero, or None when the system is inconsistent."""
    if len(b) != m.rows:
        raise AmbientMismatchError(f"Right-hand side of length {len(b)} for {m.rows} rows")
    field = m.field
    augmented = [list(row) + [field.coerce(x)] for row, x in zip(m, b)]
    rows, pivots = _reduce_rows(field, augmented, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [field.zero] * m.cols
    for k, p in enumerate(pivots):
        x[p] = rows[k][m.cols]
    return tuple(x)


def kernel(m: Matrix) -> "Subspace":
    """The subspace of vectors x with ``m x = 0``."""
    field = m.field
    if m.rows == 0 or m.cols == 0:
        return Subspace.full(field, m.cols)
    null = _domain_matrix(field, m.grid, m.cols).nullspace()
    return Subspace(field, m.cols, _raw_rows(field, null))


class Subspace:
    """A subspace of F^n kept as the RREF of its row space; equal subspaces have equal bases."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: FieldDescriptor, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        rows = [[field.coerce(x) for x in v] for v in vectors]
        if any(len(v) != ambient_dim for v in rows):
            raise AmbientMismatchError(f"Vectors must have length {ambient_dim}")
        rows, pivots = _reduce_rows(field, rows, ambient_dim)
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = Matrix._raw(field, rows[: len(pivots)], ambient_dim)
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, field: FieldDescriptor, n: int) -> "Subspace":
        return cls(field, n)

    @classmethod
    def full(cls, field: FieldDescriptor, n: int) -> "Subspace":
        return cls(field, n, Matrix.identity(field, n))

    @classmethod
    def coordinate(cls, field: FieldDescriptor, n: int, indices: Iterable[int]) -> "Subspace":
        """Span of the standard basis vectors with the given 0-based indices."""
        ident = Matrix.identity(field, n)
        return cls(field, n, [ident.row(i) for i in indices])

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> Tuple[Vector, ...]:
        return self.basis.grid

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise AmbientMismatchError(
                f"Subspaces of {self.field}^{self.ambient_dim} and {other.field}^{other.ambient_dim} do not mix"
            )

    def reduce(self, vector: Sequence) -> Vector:
        """Remainder of a vector after elimination against the basis (zero iff contained)."""
        field = self.field
        v = [field.coerce(x) for x in vector]
        for row, p in zip(self.basis, self.pivots):
            factor = v[p]
            if factor != 0:
                v = [field.sub(x, field.mul(factor, y)) for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, vector: Sequence) -> bool:
        if len(vector) != self.ambient_dim:
            raise AmbientMismatchError(f"Vector of length {len(vector)} in ambient dimension {self.ambient_dim}")
        return all(x == 0 for x in self.reduce(vector))

    __contains__ = contains

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient_dim, self.vectors() + other.vectors())

    def intersect(self, other: "Subspace") -> "Subspace":
        """Kernel of the stacked annihilators."""
        self._check(other)
        return kernel(self.annihilator().basis.vstack(other.annihilator().basis))

    __and__ = intersect

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.vectors())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.field == other.field and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def annihilator(self) -> "Subspace":
        """Vectors w with ``w . x = 0`` for every x in the subspace."""
        return kernel(self.basis)

    def image(self, matrix: Matrix) -> "Subspace":
        """Image under a matrix whose columns are the images of the standard basis."""
        if matrix.cols != self.ambient_dim:
            raise AmbientMismatchError(f"{matrix.rows}x{matrix.cols} matrix on ambient dimension {self.ambient_dim}")
        return Subspace(self.field, matrix.rows, [matrix.apply(v) for v in self.vectors()])

    def __repr__(self) -> str:
        return f"Subspace({self.field}^{self.ambient_dim}, {self.basis.text_rows()})"


def subspace_ops(op: Union[SubspaceOp, str], a: Subspace, b: Union[Subspace, Sequence]) -> Union[Subspace, bool]:
    """
    Sum, intersection, membership and equality of subspaces.

    Raises:
        AmbientMismatchError: the operands live in different spaces.
    """
    op = SubspaceOp(op)
    if op is SubspaceOp.contains:
        if isinstance(b, Subspace):
            return b <= a
        return a.contains(b)
    if not isinstance(b, Subspace):
        raise AmbientMismatchError(f"{op.value} needs two subspaces")
    if op is SubspaceOp.sum:
        return a + b
    if op is SubspaceOp.intersect:
        return a.intersect(b)
    a._check(b)
    return a == b
