"""
Finite-dimensional left Leibniz algebras given by structure constants.

Basis indices are 0-based. The structure tensor is sparse: only nonzero brackets of basis vectors
are stored, keyed by ``(i, j)``.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .exact import FieldDescriptor, Matrix, Raw, Subspace, Vector, kernel, mat_inverse
from .exceptions import AlgebraMismatchError, AmbientMismatchError, LeibnizIdentityError, SingularMatrixError, StructureError
from .models.enums import SeriesKind

log = logging.getLogger("leibniz.leibniz")


class LeibnizAlgebra:
    __slots__ = ("field", "dim", "tensor", "names")

    def __init__(
        self,
        field: FieldDescriptor,
        dim: int,
        tensor: Mapping[Tuple[int, int], Sequence],
        names: Optional[Sequence[str]] = None,
    ):
        """
        Build an algebra and verify the left Leibniz identity.

        Args:
            field (FieldDescriptor): the ground field.
            dim (int): dimension, at least one.
            tensor (Mapping): ``(i, j) -> coordinates of [b_i, b_j]``, 0-based; absent pairs are zero.
            names (Sequence[str], optional): basis names for display, ``b1..bn`` by default.

        Raises:
            AmbientMismatchError: a key or a vector does not fit the dimension.
            LeibnizIdentityError: the identity fails; ``triple`` is the first violating basis triple.
        """
        self._setup(field, dim, tensor, names)
        check = check_left_leibniz(self)
        if not check.holds:
            i, j, k = check.triple
            raise LeibnizIdentityError(
                f"Left Leibniz identity fails on basis triple ({i + 1}, {j + 1}, {k + 1})", triple=check.triple
            )

    @classmethod
    def _raw(cls, field, dim, tensor, names=None) -> "LeibnizAlgebra":
        """Build without the identity check."""
        algebra = cls.__new__(cls)
        algebra._setup(field, dim, tensor, names)
        return algebra

    def _setup(self, field, dim, tensor, names) -> None:
        if dim < 1:
            raise AmbientMismatchError("An algebra needs dimension at least 1")
        stored: Dict[Tuple[int, int], Vector] = {}
        for (i, j), vector in tensor.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise AmbientMismatchError(f"Bracket index ({i}, {j}) out of range for dimension {dim}")
            if len(vector) != dim:
                raise AmbientMismatchError(f"Bracket value of length {len(vector)} in dimension {dim}")
            vector = tuple(field.coerce(x) for x in vector)
            if any(x != 0 for x in vector):
                stored[(i, j)] = vector
        self.field = field
        self.dim = dim
        self.tensor = stored
        self.names = tuple(names) if names else tuple(f"b{i + 1}" for i in range(dim))

    def structure(self, i: int, j: int) -> Vector:
        return self.tensor.get((i, j)) or (self.field.zero,) * self.dim

    def bracket_vectors(self, x: Sequence[Raw], y: Sequence[Raw]) -> Vector:
        field = self.field
        out = [field.zero] * self.dim
        for (i, j), vector in self.tensor.items():
            if x[i] == 0 or y[j] == 0:
                continue
            c = field.mul(x[i], y[j])
            for k, v in enumerate(vector):
                if v != 0:
                    out[k] = field.add(out[k], field.mul(c, v))
        return tuple(out)

    def unit(self, i: int) -> Vector:
        return tuple(self.field.one if k == i else self.field.zero for k in range(self.dim))

    def element(self, coords: Sequence) -> "Element":
        return Element(self, coords)

    def basis(self, i: int) -> "Element":
        return Element(self, self.unit(i))

    def zero(self) -> "Element":
        return Element(self, (self.field.zero,) * self.dim)

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def null(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def format_vector(self, v: Sequence[Raw]) -> str:
        terms = []
        for name, c in zip(self.names, v):
            s = self.field.signed(c)
            if s == 0:
                continue
            mag = self.field.format_value(abs(s))
            body = name if mag == "1" else f"{mag}*{name}"
            if terms:
                terms.append(f"{'-' if s < 0 else '+'} {body}")
            else:
                terms.append(f"-{body}" if s < 0 else body)
        return " ".join(terms) if terms else "0"

    def __eq__(self, other) -> bool:
        if not isinstance(other, LeibnizAlgebra):
            return NotImplemented
        return self.field == other.field and self.dim == other.dim and self.tensor == other.tensor

    def __hash__(self) -> int:
        return hash((self.field.p, self.dim, tuple(sorted(self.tensor.items()))))

    def __repr__(self) -> str:
        return f"LeibnizAlgebra({self.field}, dim={self.dim}, brackets={len(self.tensor)})"


class Element:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: LeibnizAlgebra, coords: Sequence):
        if len(coords) != algebra.dim:
            raise AmbientMismatchError(f"Element of length {len(coords)} in dimension {algebra.dim}")
        self.algebra = algebra
        self.coords: Vector = tuple(algebra.field.coerce(x) for x in coords)

    def _check(self, other: "Element") -> None:
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatchError("Elements belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        add = self.algebra.field.add
        return Element(self.algebra, [add(x, y) for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        sub = self.algebra.field.sub
        return Element(self.algebra, [sub(x, y) for x, y in zip(self.coords, other.coords)])

    def __neg__(self) -> "Element":
        return self.scale(-1)

    def scale(self, c) -> "Element":
        field = self.algebra.field
        c = field.coerce(c)
        return Element(self.algebra, [field.mul(c, x) for x in self.coords])

    __rmul__ = scale

    def bracket(self, other: "Element") -> "Element":
        return bracket(self, other)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __str__(self) -> str:
        return self.algebra.format_vector(self.coords)

    def __repr__(self) -> str:
        return f"Element({self})"


def bracket(x: Element, y: Element) -> Element:
    """
    Bilinear bracket from the structure constants.

    Raises:
        AlgebraMismatchError: x and y belong to different algebras.
    """
    x._check(y)
    return Element(x.algebra, x.algebra.bracket_vectors(x.coords, y.coords))


class IdentityCheck(NamedTuple):
    holds: bool
    triple: Optional[Tuple[int, int, int]] = None


def check_left_leibniz(L: LeibnizAlgebra) -> IdentityCheck:
    """
    ``[[a, b], c] = [a, [b, c]] - [b, [a, c]]`` on every basis triple, in lexicographic order.

    Returns:
        IdentityCheck: ``holds`` plus the first violating 0-based triple.
    """
    field = L.field
    units = [L.unit(i) for i in range(L.dim)]
    for i in range(L.dim):
        for j in range(L.dim):
            ij = L.structure(i, j)
            for k in range(L.dim):
                lhs = L.bracket_vectors(ij, units[k])
                first = L.bracket_vectors(units[i], L.structure(j, k))
                second = L.bracket_vectors(units[j], L.structure(i, k))
                if any(x != field.sub(y, z) for x, y, z in zip(lhs, first, second)):
                    log.debug("Leibniz identity fails at (%s, %s, %s)", i, j, k)
                    return IdentityCheck(False, (i, j, k))
    return IdentityCheck(True)


class Centers(NamedTuple):
    left: Subspace
    right: Subspace
    two_sided: Subspace


def _left_constraints(L: LeibnizAlgebra) -> List[List[Raw]]:
    # rows of the linear conditions [x, b_j] = 0 in the unknown x
    return [[L.structure(i, j)[k] for i in range(L.dim)] for j in range(L.dim) for k in range(L.dim)]


def _right_constraints(L: LeibnizAlgebra) -> List[List[Raw]]:
    return [[L.structure(j, i)[k] for i in range(L.dim)] for j in range(L.dim) for k in range(L.dim)]


def centers(L: LeibnizAlgebra) -> Centers:
    """Left, right and two-sided centers, each the kernel of stacked multiplication maps."""
    left_rows, right_rows = _left_constraints(L), _right_constraints(L)
    left = kernel(Matrix._raw(L.field, left_rows, L.dim))
    right = kernel(Matrix._raw(L.field, right_rows, L.dim))
    two_sided = kernel(Matrix._raw(L.field, left_rows + right_rows, L.dim))
    return Centers(left, right, two_sided)


def _check_ambient(L: LeibnizAlgebra, *subspaces: Subspace) -> None:
    for s in subspaces:
        if s.ambient_dim != L.dim or s.field != L.field:
            raise AmbientMismatchError(f"Subspace of {s.field}^{s.ambient_dim} in an algebra of dimension {L.dim}")


def product_subspace(L: LeibnizAlgebra, A: Subspace, B: Subspace) -> Subspace:
    """The span of ``[u, v]`` for u in A and v in B."""
    _check_ambient(L, A, B)
    return Subspace(L.field, L.dim, [L.bracket_vectors(u, v) for u in A.vectors() for v in B.vectors()])


def leib_kernel(L: LeibnizAlgebra) -> Subspace:
    """Span of all squares ``[x, x]``, by polarization."""
    field = L.field
    vectors = [L.structure(i, i) for i in range(L.dim)]
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            vectors.append([field.add(x, y) for x, y in zip(L.structure(i, j), L.structure(j, i))])
    return Subspace(field, L.dim, vectors)


def is_lie(L: LeibnizAlgebra) -> bool:
    return leib_kernel(L).dim == 0


def left_multiplication(L: LeibnizAlgebra, x: Sequence) -> Matrix:
    """Matrix of ``b -> [x, b]``; column j is ``[x, b_j]``."""
    x = tuple(L.field.coerce(c) for c in x)
    return Matrix.from_columns(L.field, [L.bracket_vectors(x, L.unit(j)) for j in range(L.dim)])


def is_ideal(L: LeibnizAlgebra, A: Subspace) -> bool:
    full = L.full()
    return product_subspace(L, full, A) <= A and product_subspace(L, A, full) <= A


def is_subalgebra(L: LeibnizAlgebra, A: Subspace) -> bool:
    return product_subspace(L, A, A) <= A


@dataclass(frozen=True)
class CentralSeries:
    kind: SeriesKind
    terms: Tuple[Subspace, ...]
    stabilized: bool = True

    @property
    def distinct(self) -> Tuple[Subspace, ...]:
        """Terms without the closing repetition."""
        return self.terms[:-1] if len(self.terms) > 1 and self.terms[-1] == self.terms[-2] else self.terms

    @property
    def last(self) -> Subspace:
        return self.terms[-1]


def lower_central_series(L: LeibnizAlgebra) -> CentralSeries:
    """``L, [L, L], [L, [L, L]], ...`` until a term repeats; the repeated term closes the list."""
    full = L.full()
    terms = [full]
    while True:
        step = product_subspace(L, full, terms[-1])
        terms.append(step)
        if step == terms[-2]:
            break
    log.debug("Lower central series dims %s", [t.dim for t in terms])
    return CentralSeries(SeriesKind.lower, tuple(terms))


def _upper_step(L: LeibnizAlgebra, previous: Subspace) -> Subspace:
    # x with [x, b_j] and [b_j, x] in previous, i.e. orthogonal to its annihilator
    field = L.field
    rows = []
    for w in previous.annihilator().vectors():
        for j in range(L.dim):
            rows.append([field.dot(w, L.structure(i, j)) for i in range(L.dim)])
            rows.append([field.dot(w, L.structure(j, i)) for i in range(L.dim)])
    return kernel(Matrix._raw(field, rows, L.dim))


def upper_central_series(L: LeibnizAlgebra) -> CentralSeries:
    """``0, Z_1, Z_2, ...`` with ``Z_{k+1}/Z_k`` the center of ``L/Z_k``, computed as kernels."""
    terms = [L.null()]
    while True:
        step = _upper_step(L, terms[-1])
        terms.append(step)
        if step == terms[-2]:
            break
    log.debug("Upper central series dims %s", [t.dim for t in terms])
    return CentralSeries(SeriesKind.upper, tuple(terms))


def is_nilpotent(L: LeibnizAlgebra) -> Tuple[bool, Optional[int]]:
    """
    Returns:
        tuple: whether the lower series reaches zero, and the class c with ``gamma_{c+1} = 0 != gamma_c``.
    """
    series = lower_central_series(L)
    if series.last.dim != 0:
        return False, None
    return True, next(k for k, term in enumerate(series.terms) if term.dim == 0)


def rebased(L: LeibnizAlgebra, T: Matrix, names: Optional[Sequence[str]] = None) -> LeibnizAlgebra:
    """
    Structure constants in a new basis.

    Args:
        T (Matrix): row r holds the coordinates of the r-th new basis vector in the old basis.

    Raises:
        SingularMatrixError: the rows of T are not a basis.
    """
    if T.shape != (L.dim, L.dim):
        raise AmbientMismatchError(f"Change of basis must be {L.dim}x{L.dim}")
    try:
        to_new = mat_inverse(T.transpose())
    except SingularMatrixError:
        raise SingularMatrixError("Rows of the change of basis are not independent")
    rows = T.grid
    tensor = {}
    for r in range(L.dim):
        for s in range(L.dim):
            v = L.bracket_vectors(rows[r], rows[s])
            if any(x != 0 for x in v):
                tensor[(r, s)] = to_new.apply(v)
    return LeibnizAlgebra(L.field, L.dim, tensor, names)


def _coordinate_algebra(L: LeibnizAlgebra, keep: Sequence[int], names: Optional[Sequence[str]]) -> LeibnizAlgebra:
    tensor = {}
    for a, i in enumerate(keep):
        for b, j in enumerate(keep):
            v = L.structure(i, j)
            tensor[(a, b)] = [v[k] for k in keep]
    return LeibnizAlgebra(L.field, len(keep), tensor, names or [L.names[i] for i in keep])


def coordinate_quotient(L: LeibnizAlgebra, keep: Iterable[int], names: Optional[Sequence[str]] = None) -> LeibnizAlgebra:
    """
    The quotient by the span of the basis vectors not in ``keep``, in the basis of the kept cosets.

    Raises:
        StructureError: the dropped span is not an ideal.
    """
    keep = sorted(set(keep))
    dropped = Subspace.coordinate(L.field, L.dim, [i for i in range(L.dim) if i not in keep])
    if not is_ideal(L, dropped):
        raise StructureError("The dropped basis vectors do not span an ideal")
    return _coordinate_algebra(L, keep, names)


def coordinate_subalgebra(L: LeibnizAlgebra, keep: Iterable[int], names: Optional[Sequence[str]] = None) -> LeibnizAlgebra:
    """
    Restriction to the span of the kept basis vectors.

    Raises:
        StructureError: the span is not closed under the bracket.
    """
    keep = sorted(set(keep))
    if not is_subalgebra(L, Subspace.coordinate(L.field, L.dim, keep)):
        raise StructureError("The kept basis vectors do not span a subalgebra")
    return _coordinate_algebra(L, keep, names)
