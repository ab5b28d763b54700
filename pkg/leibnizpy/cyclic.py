"""
Cyclic Leibniz algebras.

A cyclic algebra of dimension n has the basis ``a1, ..., an`` with ``[a1, ak] = a(k+1)`` for
``k < n`` and ``[a1, an] = alpha_2 a2 + ... + alpha_n an``; every other bracket vanishes. The
coefficient tuple is stored dense and indexed from 2, so ``alpha[0]`` is alpha_2.

Types:
    I: every alpha is zero (nilpotent).
    II: alpha_2 is nonzero.
    III: alpha_2 is zero and t >= 3 is the first index with alpha_t nonzero.
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import NamedTuple, Optional, Tuple

from .exact import FieldDescriptor, Matrix, Raw, Subspace, solve
from .exceptions import (
    AmbientMismatchError,
    BadSpecError,
    DependentOperatorsError,
    FieldMismatchError,
    InvalidInputError,
    NotClosedUnderCommutatorError,
    SingularOperatorError,
    WrongTypeError,
)
from .leibniz import Element, LeibnizAlgebra, coordinate_quotient, rebased
from .models.enums import CyclicType
from .polyring import Poly

log = logging.getLogger("leibniz.cyclic")


@dataclass(frozen=True)
class CyclicSpec:
    field: FieldDescriptor
    n: int
    alpha: Tuple[Raw, ...] = ()

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise BadSpecError(f"Dimension must be a positive integer, got {self.n!r}")
        try:
            alpha = tuple(self.field.coerce(x) for x in self.alpha)
        except InvalidInputError as e:
            raise BadSpecError(f"Bad coefficient: {e.message}")
        if len(alpha) != self.n - 1:
            raise BadSpecError(f"Dimension {self.n} needs {self.n - 1} coefficients, got {len(alpha)}")
        object.__setattr__(self, "alpha", alpha)

    def alpha_at(self, i: int) -> Raw:
        """alpha_i for 2 <= i <= n."""
        return self.alpha[i - 2]

    def alpha_strings(self):
        return [self.field.format_value(x) for x in self.alpha]


@dataclass(frozen=True)
class TypeTag:
    variant: CyclicType
    t: Optional[int] = None

    def __str__(self) -> str:
        if self.variant is CyclicType.III:
            return f"type III (t={self.t})"
        return f"type {self.variant.value}"


def classify(spec: CyclicSpec) -> TypeTag:
    nonzero = [i for i in range(2, spec.n + 1) if spec.alpha_at(i) != 0]
    if not nonzero:
        return TypeTag(CyclicType.I)
    if nonzero[0] == 2:
        return TypeTag(CyclicType.II)
    return TypeTag(CyclicType.III, nonzero[0])


@dataclass(frozen=True)
class CyclicAlgebra:
    spec: CyclicSpec
    algebra: LeibnizAlgebra = dc_field(compare=False)
    tag: TypeTag = dc_field(compare=False)

    @property
    def field(self) -> FieldDescriptor:
        return self.spec.field

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def variant(self) -> CyclicType:
        return self.tag.variant

    def a(self, i: int) -> Element:
        """The basis element a_i, 1-based."""
        return self.algebra.basis(i - 1)

    def require(self, *variants: CyclicType) -> None:
        if self.tag.variant not in variants:
            names = " or ".join(v.value for v in variants)
            raise WrongTypeError(f"Needs a type {names} algebra, got {self.tag}")


def build_cyclic(spec: CyclicSpec) -> CyclicAlgebra:
    """
    Structure constants of the cyclic algebra, checked against the Leibniz identity.

    Raises:
        BadSpecError: the spec is malformed.
    """
    if not isinstance(spec, CyclicSpec):
        raise BadSpecError(f"Expected a CyclicSpec, got {type(spec).__name__}")
    field, n = spec.field, spec.n
    tensor = {}
    for j in range(n - 1):
        tensor[(0, j)] = [field.one if k == j + 1 else field.zero for k in range(n)]
    tensor[(0, n - 1)] = (field.zero,) + spec.alpha
    algebra = LeibnizAlgebra(field, n, tensor, [f"a{i + 1}" for i in range(n)])
    tag = classify(spec)
    log.debug("Built cyclic algebra n=%s alpha=%s: %s", n, spec.alpha_strings(), tag)
    return CyclicAlgebra(spec, algebra, tag)


def cyclic(field: FieldDescriptor, n: int, *alpha) -> CyclicAlgebra:
    """Shorthand for ``build_cyclic(CyclicSpec(field, n, alpha))``."""
    return build_cyclic(CyclicSpec(field, n, tuple(alpha)))


def commutator_ideal(L: CyclicAlgebra) -> Subspace:
    """``[L, L] = span{a2, ..., an}``."""
    return Subspace.coordinate(L.field, L.n, range(1, L.n))


class CanonicalC(NamedTuple):
    c: Element
    companion: Matrix


def canonical_c(L: CyclicAlgebra) -> CanonicalC:
    """
    The element ``c = alpha_2^-1 (alpha_2 a1 + alpha_3 a2 + ... + alpha_n a(n-1) - an)`` spanning the right
    center, and the matrix of ``b -> [c, b]`` on ``[L, L]`` in the basis ``a2..an``.

    Raises:
        WrongTypeError: L is not of type II.
    """
    L.require(CyclicType.II)
    field, n, spec = L.field, L.n, L.spec
    inv2 = field.inv(spec.alpha_at(2))
    coords = [field.zero] * n
    coords[0] = field.one
    for k in range(2, n):
        coords[k - 1] = field.mul(spec.alpha_at(k + 1), inv2)
    coords[n - 1] = field.add(coords[n - 1], field.neg(inv2))
    size = n - 1
    companion = [[field.zero] * size for _ in range(size)]
    for k in range(1, size):
        companion[k][k - 1] = field.one
    for k in range(size):
        companion[k][size - 1] = spec.alpha_at(k + 2)
    return CanonicalC(L.algebra.element(coords), Matrix._raw(field, companion, size))


def annihilator_polynomial(L: CyclicAlgebra) -> Poly:
    """``a(X) = alpha_2 + alpha_3 X + ... + alpha_n X^(n-2) - X^(n-1)`` of a type II algebra."""
    L.require(CyclicType.II)
    return Poly(L.field, L.spec.alpha + (L.field.neg(L.field.one),))


def c_basis_algebra(L: CyclicAlgebra) -> LeibnizAlgebra:
    """The algebra in the basis ``(c, a2, ..., an)``."""
    c = canonical_c(L).c
    rows = [c.coords] + [L.algebra.unit(i) for i in range(1, L.n)]
    return rebased(L.algebra, Matrix._raw(L.field, rows, L.n), ["c"] + [f"a{i + 1}" for i in range(1, L.n)])


@dataclass(frozen=True)
class RebaseResult:
    """
    The d-basis of a type III algebra.

    ``T`` has the coordinates of ``d1..dn`` as rows. ``U_sub`` is spanned by ``d1..d(t-1)``, ``UU_sub``
    by ``d2..d(t-1)`` and ``V_sub`` by ``dt..dn``. ``beta`` holds ``beta_t..beta_n``.
    """

    t: int
    beta: Tuple[Raw, ...]
    T: Matrix
    U_sub: Subspace
    UU_sub: Subspace
    V_sub: Subspace
    d_algebra: LeibnizAlgebra
    quotient_mod_V: LeibnizAlgebra
    quotient_mod_UU: LeibnizAlgebra
    spec_mod_V: CyclicSpec
    spec_mod_UU: CyclicSpec

    @property
    def mod_V_keep(self) -> Tuple[int, ...]:
        """d-basis indices surviving in ``L/V``."""
        return tuple(range(self.t - 1))

    @property
    def mod_UU_keep(self) -> Tuple[int, ...]:
        """d-basis indices surviving in ``L/[U,U]``: d1 and ``dt..dn``."""
        return (0,) + tuple(range(self.t - 1, self.T.rows))


def rebase_type3(L: CyclicAlgebra) -> RebaseResult:
    """
    Change to the basis ``d1..dn`` with ``d_j = a_j`` for ``j >= t`` and, for ``m < t``,
    ``d_m = a_m + beta_t a(m+1) + ... + beta_n a(m+n-t+1)``, where ``beta_k = alpha_(k+1) / alpha_t``
    for ``t <= k < n`` and ``beta_n = -1 / alpha_t``.

    Then ``[d1, d_j] = d(j+1)`` for ``j < t-1``, ``[d1, d(t-1)] = 0``, ``[U,U]`` and V are ideals, ``L/V`` is
    the type I cyclic algebra of dimension t-1 and ``L/[U,U]`` is the type II cyclic algebra of dimension
    n-t+2 with coefficients ``alpha_t..alpha_n``, written in its ``(c, a2, ...)`` basis.

    Raises:
        WrongTypeError: L is not of type III.
    """
    L.require(CyclicType.III)
    field, n, spec = L.field, L.n, L.spec
    t = L.tag.t
    inv_t = field.inv(spec.alpha_at(t))
    beta = tuple(field.mul(spec.alpha_at(k + 1), inv_t) for k in range(t, n)) + (field.neg(inv_t),)
    log.debug("Type III rebase t=%s beta=%s", t, [field.format_value(b) for b in beta])
    rows = []
    for m in range(1, n + 1):
        row = [field.zero] * n
        row[m - 1] = field.one
        if m < t:
            for k, b in zip(range(t, n + 1), beta):
                idx = m + k - t + 1
                row[idx - 1] = field.add(row[idx - 1], b)
        rows.append(row)
    T = Matrix._raw(field, rows, n)
    d_algebra = rebased(L.algebra, T, [f"d{i + 1}" for i in range(n)])
    result = RebaseResult(
        t=t,
        beta=beta,
        T=T,
        U_sub=Subspace(field, n, rows[: t - 1]),
        UU_sub=Subspace(field, n, rows[1 : t - 1]),
        V_sub=Subspace(field, n, rows[t - 1 :]),
        d_algebra=d_algebra,
        quotient_mod_V=coordinate_quotient(d_algebra, range(t - 1)),
        quotient_mod_UU=coordinate_quotient(d_algebra, [0] + list(range(t - 1, n))),
        spec_mod_V=CyclicSpec(field, t - 1, (field.zero,) * (t - 2)),
        spec_mod_UU=CyclicSpec(field, n - t + 2, spec.alpha[t - 2 :]),
    )
    return result


@dataclass(frozen=True)
class OperatorAction:
    """Linear operators on ``F^m`` whose span is meant to be closed under commutators."""

    field: FieldDescriptor
    ambient_dim: int
    operators: Tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "operators", tuple(self.operators))
        for op in self.operators:
            if op.shape != (self.ambient_dim, self.ambient_dim):
                raise AmbientMismatchError(f"Operator of shape {op.shape} on a space of dimension {self.ambient_dim}")
            if op.field != self.field:
                raise FieldMismatchError(f"Operator over {op.field} in an action over {self.field}")


def from_lie_action(action: OperatorAction) -> LeibnizAlgebra:
    """
    The Leibniz algebra ``A + S`` on the basis ``(e1..em, f1..fs)`` with ``[a + f, b + g] = f(b) + [f, g]``,
    where ``[f, g]`` is the commutator expanded in the operator list.

    Raises:
        NotClosedUnderCommutatorError: a commutator leaves the span; ``pair`` is the first such (0-based).
        DependentOperatorsError: the operators are dependent and a nonzero commutator has no unique expansion.
    """
    field, m, ops = action.field, action.ambient_dim, action.operators
    s = len(ops)
    span = Matrix.from_columns(field, [op.flat() for op in ops], rows=m * m)
    independent = span.rank() == s
    tensor = {}
    for r, op in enumerate(ops):
        for j in range(m):
            tensor[(m + r, j)] = list(op.col(j)) + [field.zero] * s
    for r in range(s):
        for q in range(r + 1, s):
            comm = ops[r] @ ops[q] - ops[q] @ ops[r]
            if comm.is_zero():
                continue
            coeffs = solve(span, comm.flat())
            if coeffs is None:
                raise NotClosedUnderCommutatorError(
                    f"Commutator of operators {r + 1} and {q + 1} is outside their span", pair=(r, q)
                )
            if not independent:
                raise DependentOperatorsError("Operators are linearly dependent; commutators have no unique expansion")
            tensor[(m + r, m + q)] = [field.zero] * m + list(coeffs)
            tensor[(m + q, m + r)] = [field.zero] * m + [field.neg(x) for x in coeffs]
    names = [f"e{i + 1}" for i in range(m)] + [f"f{i + 1}" for i in range(s)]
    return LeibnizAlgebra(field, m + s, tensor, names)


def from_operator_action(A_dim: int, c_matrix: Matrix) -> LeibnizAlgebra:
    """
    The algebra ``Fc + A`` with ``[c, a] = c_matrix a`` and all other brackets zero, on the basis
    ``(c, e1..em)``.

    Raises:
        SingularOperatorError: c_matrix is not invertible.
    """
    if c_matrix.shape != (A_dim, A_dim):
        raise AmbientMismatchError(f"Operator of shape {c_matrix.shape} on a space of dimension {A_dim}")
    if not c_matrix.is_invertible():
        raise SingularOperatorError("The operator of c must be an automorphism of A")
    field = c_matrix.field
    lie = from_lie_action(OperatorAction(field, A_dim, (c_matrix,)))
    order = [A_dim] + list(range(A_dim))
    ident = Matrix.identity(field, A_dim + 1)
    return rebased(lie, Matrix._raw(field, [ident.row(i) for i in order], A_dim + 1), ["c"] + list(lie.names[:A_dim]))
