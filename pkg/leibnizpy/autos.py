"""
Endomorphisms and automorphisms of cyclic Leibniz algebras.

Maps are matrices whose column j holds the image of the j-th basis vector. Closed forms:

Type I:
    every endomorphism is determined by ``f(a1) = gamma_1 a1 + ... + gamma_n an`` and has the entries
    ``gamma_1^(j-1) gamma_(i-j+1)`` on and below the diagonal. Automorphisms (``gamma_1 != 0``) split as
    ``M(u) D(gamma_1)`` with M(u) unitriangular Toeplitz and ``D(g) = diag(g, g^2, ..., g^n)``, and
    ``M(u) -> 1 + u_2 z + ... + u_n z^(n-1)`` identifies the unitriangular part with the units of
    ``F[X]/X^n`` with constant term 1.
Type II:
    the endomorphisms fixing c act on ``[L, L]`` as polynomials in ``l_c``; reading ``f(a2)`` gives the
    residue of ``f`` in ``F[X]/a(X)``.
Type III:
    automorphisms act faithfully on the pair of quotients ``L/V`` and ``L/[U,U]``.

Enumeration oracles scan every matrix over a prime field in lexicographic order of the row-major
entry sequence.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from .cyclic import CyclicAlgebra, RebaseResult, annihilator_polynomial, canonical_c, commutator_ideal, rebase_type3
from .exact import FieldDescriptor, Matrix, Raw, Scalar, Subspace, Vector, mat_inverse
from .exceptions import (
    AlgebraMismatchError,
    AmbientMismatchError,
    IdealNotPreservedError,
    InfiniteFieldError,
    InvalidInputError,
    NotAnAutomorphismError,
    NotAnEndomorphismError,
    NotInDError,
    StructureError,
    VerificationError,
    WrongModulusError,
    WrongTypeError,
)
from .leibniz import LeibnizAlgebra, left_multiplication
from .models.enums import CyclicType, EndoKind, QuotientBlock
from .models.reports import SubdirectReport
from .polyring import Poly, QuotElement, QuotientRing
from .settings import Settings, check_guard, default_settings

log = logging.getLogger("leibniz.autos")

AlgebraLike = Union[CyclicAlgebra, LeibnizAlgebra]


class LinearMap:
    __slots__ = ("algebra", "cyclic", "matrix")

    def __init__(self, algebra: AlgebraLike, matrix: Union[Matrix, Sequence[Sequence]]):
        if isinstance(algebra, CyclicAlgebra):
            self.cyclic: Optional[CyclicAlgebra] = algebra
            self.algebra: LeibnizAlgebra = algebra.algebra
        else:
            self.cyclic = None
            self.algebra = algebra
        if not isinstance(matrix, Matrix):
            matrix = Matrix(self.algebra.field, matrix)
        if matrix.shape != (self.algebra.dim, self.algebra.dim):
            raise AmbientMismatchError(f"A map of a {self.algebra.dim}-dimensional algebra needs a square matrix")
        if matrix.field != self.algebra.field:
            raise AlgebraMismatchError(f"Matrix over {matrix.field} for an algebra over {self.algebra.field}")
        self.matrix = matrix

    @classmethod
    def identity(cls, algebra: AlgebraLike) -> "LinearMap":
        inner = algebra.algebra if isinstance(algebra, CyclicAlgebra) else algebra
        return cls(algebra, Matrix.identity(inner.field, inner.dim))

    @classmethod
    def from_columns(cls, algebra: AlgebraLike, columns: Sequence[Sequence]) -> "LinearMap":
        inner = algebra.algebra if isinstance(algebra, CyclicAlgebra) else algebra
        return cls(algebra, Matrix.from_columns(inner.field, columns))

    @property
    def owner(self) -> AlgebraLike:
        return self.cyclic or self.algebra

    @property
    def field(self) -> FieldDescriptor:
        return self.algebra.field

    @property
    def n(self) -> int:
        return self.algebra.dim

    def require(self, *variants: CyclicType) -> CyclicAlgebra:
        if self.cyclic is None:
            raise WrongTypeError("Needs a map of a cyclic algebra")
        self.cyclic.require(*variants)
        return self.cyclic

    def __call__(self, vector: Sequence) -> Vector:
        return self.matrix.apply(vector)

    def image(self, subspace: Subspace) -> Subspace:
        return subspace.image(self.matrix)

    def _check(self, other: "LinearMap") -> None:
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatchError("Maps of different algebras do not compose")

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        """Composition ``self o other``."""
        self._check(other)
        return LinearMap(self.owner, self.matrix @ other.matrix)

    compose = __matmul__

    def inverse(self) -> "LinearMap":
        return LinearMap(self.owner, mat_inverse(self.matrix))

    def __pow__(self, k: int) -> "LinearMap":
        return LinearMap(self.owner, self.matrix**k)

    def is_invertible(self) -> bool:
        return self.matrix.is_invertible()

    def is_identity(self) -> bool:
        return self.matrix == Matrix.identity(self.field, self.n)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def order(self) -> int:
        """
        Multiplicative order of an invertible map over a prime field.

        Raises:
            InfiniteFieldError: over Q, where orders may be infinite.
            NotAnAutomorphismError: the map is singular.
        """
        if not self.field.is_finite:
            raise InfiniteFieldError("Element orders are only computed over prime fields")
        if not self.is_invertible():
            raise NotAnAutomorphismError("A singular map has no multiplicative order")
        ident = Matrix.identity(self.field, self.n)
        power, k = self.matrix, 1
        while power != ident:
            power = power @ self.matrix
            k += 1
        return k

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.algebra == other.algebra and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"LinearMap({self.matrix.text_rows()})"


class EndoCheck(NamedTuple):
    holds: bool
    pair: Optional[Tuple[int, int]] = None


def is_endomorphism(f: LinearMap) -> EndoCheck:
    """
    ``f([b_i, b_j]) = [f(b_i), f(b_j)]`` on every basis pair, in lexicographic order.

    Returns:
        EndoCheck: ``holds`` plus the first violating 0-based pair.
    """
    L = f.algebra
    cols = f.matrix.columns()
    for i in range(L.dim):
        for j in range(L.dim):
            if f(L.structure(i, j)) != L.bracket_vectors(cols[i], cols[j]):
                return EndoCheck(False, (i, j))
    return EndoCheck(True)


def is_automorphism(f: LinearMap) -> bool:
    return f.is_invertible() and is_endomorphism(f).holds


def _require_endomorphism(f: LinearMap) -> None:
    check = is_endomorphism(f)
    if not check.holds:
        i, j = check.pair
        raise NotAnEndomorphismError(f"Map does not preserve the bracket of basis pair ({i + 1}, {j + 1})")


def _require_automorphism(f: LinearMap) -> None:
    if not is_automorphism(f):
        raise NotAnAutomorphismError("Map is not a bijective endomorphism")


@dataclass(frozen=True)
class GammaParams:
    """Coordinates of ``f(a1)``: gamma_1..gamma_n."""

    field: FieldDescriptor
    gamma: Tuple[Raw, ...]

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(self.field.coerce(x) for x in self.gamma))


def type1_matrix(field: FieldDescriptor, gamma: Sequence[Raw]) -> Matrix:
    """Entry ``(i, j)`` is ``gamma_1^j gamma_(i-j)`` for ``i >= j`` (0-based) and zero above the diagonal."""
    n = len(gamma)
    powers = [field.power(gamma[0], j) for j in range(n)] if n else []
    rows = [[field.mul(powers[j], gamma[i - j]) if i >= j else field.zero for j in range(n)] for i in range(n)]
    return Matrix._raw(field, rows, n)


def endo_type1_from_gammas(L: CyclicAlgebra, g: Union[GammaParams, Sequence]) -> LinearMap:
    """
    The endomorphism of a type I algebra with ``f(a1) = gamma_1 a1 + ... + gamma_n an``.

    Raises:
        WrongTypeError: L is not of type I.
    """
    L.require(CyclicType.I)
    if not isinstance(g, GammaParams):
        g = GammaParams(L.field, tuple(g))
    if len(g.gamma) != L.n:
        raise AmbientMismatchError(f"Need {L.n} gamma values, got {len(g.gamma)}")
    return LinearMap(L, type1_matrix(L.field, g.gamma))


def endo_from_generator_image(L: CyclicAlgebra, v: Sequence) -> LinearMap:
    """
    The linear map with ``a1 -> v`` and ``a(k+1) -> [v, f(a_k)]``.

    It is the only candidate endomorphism sending a1 to v; whether it preserves ``[a1, an]`` is up to v.
    """
    algebra = L.algebra
    v = tuple(L.field.coerce(x) for x in v)
    columns = [v]
    for _ in range(1, L.n):
        columns.append(algebra.bracket_vectors(v, columns[-1]))
    return LinearMap.from_columns(L, columns)


def is_in_S(f: LinearMap) -> bool:
    """
    Membership in the square-zero ideal: ``f o f = 0``, equivalently ``f(L)`` inside ``[L, L]``.

    Raises:
        NotAnEndomorphismError: f does not preserve brackets.
        VerificationError: the two characterizations disagree.
    """
    L = f.require(CyclicType.I, CyclicType.II, CyclicType.III)
    _require_endomorphism(f)
    square_zero = (f @ f).is_zero()
    inside = f.image(f.algebra.full()) <= commutator_ideal(L)
    if square_zero != inside:
        raise VerificationError("f o f = 0 and f(L) <= [L, L] disagree")
    return square_zero


def theta_scalar(f: LinearMap) -> Scalar:
    """
    The scalar lambda with ``f(a1) - lambda a1`` in ``[L, L]``.

    Raises:
        NotAnAutomorphismError: f is not an automorphism.
    """
    f.require(CyclicType.I, CyclicType.II, CyclicType.III)
    _require_automorphism(f)
    return f.matrix.scalar(0, 0)


def in_subgroup_U(f: LinearMap) -> bool:
    return theta_scalar(f).value == f.field.one


def unitriangular_matrix(field: FieldDescriptor, u: Sequence) -> Matrix:
    """M(u): lower triangular Toeplitz with first column ``(1, u_2, ..., u_n)``."""
    column = (field.one,) + tuple(field.coerce(x) for x in u)
    n = len(column)
    return Matrix._raw(field, [[column[i - j] if i >= j else field.zero for j in range(n)] for i in range(n)], n)


def diagonal_matrix(field: FieldDescriptor, n: int, gamma) -> Matrix:
    """D(gamma) = diag(gamma, gamma^2, ..., gamma^n)."""
    gamma = field.coerce(gamma)
    return Matrix._raw(
        field, [[field.power(gamma, i + 1) if i == j else field.zero for j in range(n)] for i in range(n)], n
    )


def diagonal_automorphism(L: CyclicAlgebra, gamma) -> LinearMap:
    L.require(CyclicType.I)
    return LinearMap(L, diagonal_matrix(L.field, L.n, gamma))


@dataclass(frozen=True)
class UDDecomposition:
    field: FieldDescriptor
    u_params: Tuple[Raw, ...]
    d_scalar: Raw

    @property
    def n(self) -> int:
        return len(self.u_params) + 1

    def unitriangular(self) -> Matrix:
        return unitriangular_matrix(self.field, self.u_params)

    def diagonal(self) -> Matrix:
        return diagonal_matrix(self.field, self.n, self.d_scalar)

    def reassemble(self) -> Matrix:
        return self.unitriangular() @ self.diagonal()


def decompose_UD(f: LinearMap) -> UDDecomposition:
    """
    Split a type I automorphism as ``M(u) D(gamma_1)`` with ``u_k = gamma_k / gamma_1``.

    Raises:
        WrongTypeError: f is not a map of a type I algebra.
        NotAnAutomorphismError: f is not an automorphism.
    """
    f.require(CyclicType.I)
    _require_automorphism(f)
    field = f.field
    gamma = f.matrix.col(0)
    inv = field.inv(gamma[0])
    result = UDDecomposition(field, tuple(field.mul(x, inv) for x in gamma[1:]), gamma[0])
    if result.reassemble() != f.matrix:
        raise VerificationError("Automorphism is not of the closed form M(u) D(gamma)")
    return result


def phi_to_unit(u: Union[UDDecomposition, LinearMap, Sequence], field: Optional[FieldDescriptor] = None) -> QuotElement:
    """
    ``M(u) -> 1 + u_2 z + ... + u_n z^(n-1)`` in ``F[X]/X^n``.

    Args:
        u: a decomposition (its unitriangular part is used), a map in UC(n), or ``u_2..u_n`` with ``field``.
    """
    if isinstance(u, LinearMap):
        if not in_subgroup_U(u):
            raise StructureError("Map is not unitriangular")
        u = decompose_UD(u)
    if isinstance(u, UDDecomposition):
        field, params = u.field, u.u_params
    else:
        if field is None:
            raise InvalidInputError("Raw parameters need a field")
        params = tuple(field.coerce(x) for x in u)
    ring = QuotientRing.truncated(field, len(params) + 1)
    return ring.element((field.one,) + params)


def unit_to_unitriangular(x: QuotElement) -> Matrix:
    """
    Inverse of ``phi_to_unit``: the matrix M(u) of a unit with constant term 1.

    Raises:
        WrongModulusError: the ring is not ``F[X]/X^n``.
    """
    if x.ring.truncation_degree is None:
        raise WrongModulusError(f"{x.ring} is not a truncated polynomial ring")
    coeffs = x.coefficients()
    if coeffs[0] != x.ring.field.one:
        raise InvalidInputError(f"{x} does not have constant term 1")
    return unitriangular_matrix(x.ring.field, coeffs[1:])


def centralizer_D_membership(f: LinearMap) -> bool:
    """
    Whether an endomorphism of a type II algebra fixes c.

    Raises:
        WrongTypeError: not a type II algebra.
        NotAnEndomorphismError: f does not preserve brackets.
    """
    L = f.require(CyclicType.II)
    _require_endomorphism(f)
    c = canonical_c(L).c
    return f(c.coords) == c.coords


def module_action(L: CyclicAlgebra, g: Union[Poly, QuotElement], a: Sequence) -> Vector:
    """
    ``g(X) a = g(l_c)(a)`` for ``a`` in ``[L, L]``.

    Raises:
        StructureError: a is not in ``[L, L]``.
    """
    L.require(CyclicType.II)
    if isinstance(g, QuotElement):
        g = g.residue
    if not commutator_ideal(L).contains(a):
        raise StructureError("The module action is defined on [L, L] only")
    lc = left_multiplication(L.algebra, canonical_c(L).c.coords)
    return g.evaluate_matrix(lc).apply(a)


def quotient_ring(L: CyclicAlgebra) -> QuotientRing:
    """``F[X]/a(X)F[X]`` of a type II algebra."""
    return QuotientRing(annihilator_polynomial(L))


def d_f_polynomial(f: LinearMap) -> QuotElement:
    """
    The residue of ``d_f(X) = beta_0 + beta_1 X + ... + beta_(n-2) X^(n-2)``, where
    ``f(a2) = beta_0 a2 + ... + beta_(n-2) an``.

    Raises:
        NotInDError: f does not fix c.
    """
    if not centralizer_D_membership(f):
        raise NotInDError("Endomorphism does not fix c")
    L = f.cyclic
    residue = quotient_ring(L).element(Poly(L.field, f(L.algebra.unit(1))[1:]))
    for k in range(1, L.n):
        a = L.algebra.unit(k)
        if f(a) != module_action(L, residue, a):
            raise VerificationError(f"f(a{k + 1}) differs from d_f(X) a{k + 1}")
    return residue


def _c_basis(L: CyclicAlgebra) -> Matrix:
    # columns c, a2, ..., an in a-coordinates
    c = canonical_c(L).c.coords
    return Matrix.from_columns(L.field, [c] + [L.algebra.unit(i) for i in range(1, L.n)])


def endo_from_polynomial(L: CyclicAlgebra, g: Union[Poly, QuotElement]) -> LinearMap:
    """
    The endomorphism acting as ``g(l_c)`` on ``[L, L]`` and fixing c.

    Raises:
        WrongTypeError: L is not of type II.
    """
    L.require(CyclicType.II)
    if isinstance(g, QuotElement):
        g = g.residue
    field, n = L.field, L.n
    block = g.evaluate_matrix(canonical_c(L).companion)
    rows = [[field.one] + [field.zero] * (n - 1)]
    rows += [[field.zero] + list(block.row(i)) for i in range(n - 1)]
    P = _c_basis(L)
    return LinearMap(L, P @ Matrix._raw(field, rows, n) @ mat_inverse(P))


def c_scalar(f: LinearMap) -> Scalar:
    """
    The sigma with ``f(c) = sigma c`` for an automorphism of a type II algebra.

    Raises:
        NotAnAutomorphismError: f is not an automorphism.
    """
    L = f.require(CyclicType.II)
    _require_automorphism(f)
    c = canonical_c(L).c
    image = f(c.coords)
    sigma = image[0]
    if image != c.scale(sigma).coords:
        raise VerificationError("Automorphism does not preserve the line through c")
    return Scalar(L.field, sigma)


@dataclass(frozen=True)
class AutEnumeration:
    algebra: AlgebraLike
    kind: EndoKind
    maps: Tuple[LinearMap, ...]
    candidates: int

    def __len__(self) -> int:
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)


def _int_tensor(L: LeibnizAlgebra) -> Tuple[Tuple[Tuple[int, int], Tuple[int, ...]], ...]:
    return tuple(sorted((key, tuple(int(x) for x in value)) for key, value in L.tensor.items()))


def _preserves(flat: Tuple[int, ...], n: int, p: int, tensor, lookup) -> bool:
    cols = [[flat[r * n + j] for r in range(n)] for j in range(n)]
    for i in range(n):
        x = cols[i]
        for j in range(n):
            y = cols[j]
            t = lookup.get((i, j))
            if t is None:
                lhs = [0] * n
            else:
                lhs = [sum(flat[r * n + k] * t[k] for k in range(n)) for r in range(n)]
            rhs = [0] * n
            for (k, m), v in tensor:
                c = x[k] * y[m]
                if c % p:
                    for r in range(n):
                        rhs[r] += c * v[r]
            if any((a - b) % p for a, b in zip(lhs, rhs)):
                return False
    return True


def _scan_partition(args) -> List[Tuple[int, ...]]:
    p, n, tensor, first = args
    lookup = dict(tensor)
    found = []
    for rest in itertools.product(range(p), repeat=n * n - 1):
        flat = (first,) + rest
        if _preserves(flat, n, p, tensor, lookup):
            found.append(flat)
    return found


def enumerate_endomorphisms(
    L: AlgebraLike,
    kind: Union[EndoKind, str] = EndoKind.endomorphisms,
    force: bool = False,
    settings: Optional[Settings] = None,
) -> AutEnumeration:
    """
    Test every n x n matrix over the prime field and keep the bracket-preserving ones.

    Args:
        L: the algebra.
        kind (EndoKind): endomorphisms, or automorphisms only.
        force (bool): use the raised guard.
        settings (Settings, optional): guard and worker configuration.

    Raises:
        InfiniteFieldError: the field is Q.
        GuardExceededError: ``q ** (n*n)`` is above the guard.
    """
    kind = EndoKind(kind)
    settings = settings or default_settings()
    inner = L.algebra if isinstance(L, CyclicAlgebra) else L
    field, n = inner.field, inner.dim
    if not field.is_finite:
        raise InfiniteFieldError("Exhaustive enumeration needs a prime field")
    p = field.p
    candidates = p ** (n * n)
    check_guard(candidates, force, settings)
    tensor = _int_tensor(inner)
    partitions = [(p, n, tensor, first) for first in range(p)]
    log.debug("Scanning %s candidates in %s partitions with %s workers", candidates, p, settings.workers)
    if settings.workers > 1:
        with Pool(settings.workers) as pool:
            chunks = pool.map(_scan_partition, partitions)
    else:
        chunks = [_scan_partition(part) for part in partitions]
    maps = []
    for flat in itertools.chain.from_iterable(chunks):
        matrix = Matrix._raw(field, [flat[r * n : (r + 1) * n] for r in range(n)], n)
        if kind is EndoKind.automorphisms and not matrix.is_invertible():
            continue
        maps.append(LinearMap(L, matrix))
    log.debug("Found %s %s", len(maps), kind.value)
    return AutEnumeration(L, kind, tuple(maps), candidates)


def automorphism_orders(enumeration: AutEnumeration) -> Dict[int, int]:
    """Histogram ``order -> count`` of the invertible maps of an enumeration."""
    counts = Counter(f.order() for f in enumeration.maps if f.is_invertible())
    return dict(sorted(counts.items()))


def induced_quotient_map(
    f: LinearMap, block: Union[QuotientBlock, str], rebase: Optional[RebaseResult] = None
) -> LinearMap:
    """
    The map induced by a type III automorphism on ``L/V`` or ``L/[U,U]``, in the projected d-basis.

    Raises:
        NotAnAutomorphismError: f is not an automorphism.
        IdealNotPreservedError: f does not map the ideal into itself.
    """
    L = f.require(CyclicType.III)
    _require_automorphism(f)
    block = QuotientBlock(block)
    rebase = rebase or rebase_type3(L)
    P = rebase.T.transpose()
    in_d = mat_inverse(P) @ f.matrix @ P
    t, n = rebase.t, L.n
    if block is QuotientBlock.mod_V:
        ideal, keep, target = range(t - 1, n), rebase.mod_V_keep, rebase.quotient_mod_V
    else:
        ideal, keep, target = range(1, t - 1), rebase.mod_UU_keep, rebase.quotient_mod_UU
    for j in ideal:
        for i in range(n):
            if i not in ideal and in_d[i, j] != 0:
                raise IdealNotPreservedError(f"Automorphism moves d{j + 1} out of the ideal")
    return LinearMap(target, in_d.block(keep, keep))


def subdirect_check(
    L: CyclicAlgebra,
    force: bool = False,
    settings: Optional[Settings] = None,
    enumeration: Optional[AutEnumeration] = None,
) -> SubdirectReport:
    """
    Check that ``f -> (f mod V, f mod [U,U])`` embeds Aut(L) into ``Aut(L/V) x Aut(L/[U,U])``.

    Raises:
        WrongTypeError: L is not of type III.
        GuardExceededError: the enumeration is above the guard.
    """
    L.require(CyclicType.III)
    rebase = rebase_type3(L)
    auts = enumeration or enumerate_endomorphisms(L, EndoKind.automorphisms, force, settings)
    maps = list(auts.maps)
    pairs = [
        (induced_quotient_map(f, QuotientBlock.mod_V, rebase), induced_quotient_map(f, QuotientBlock.mod_UU, rebase))
        for f in maps
    ]
    hom_V = hom_UU = True
    for (f, (f1, f2)), (g, (g1, g2)) in itertools.product(zip(maps, pairs), repeat=2):
        fg = f @ g
        hom_V = hom_V and induced_quotient_map(fg, QuotientBlock.mod_V, rebase) == f1 @ g1
        hom_UU = hom_UU and induced_quotient_map(fg, QuotientBlock.mod_UU, rebase) == f2 @ g2
    kernel = [f for f, (f1, f2) in zip(maps, pairs) if f1.is_identity() and f2.is_identity()]
    aut_V = enumerate_endomorphisms(rebase.quotient_mod_V, EndoKind.automorphisms, force, settings)
    aut_UU = enumerate_endomorphisms(rebase.quotient_mod_UU, EndoKind.automorphisms, force, settings)
    report = SubdirectReport(
        algebra=f"{L.field} n={L.n} alpha=({', '.join(L.spec.alpha_strings())})",
        aut_order=len(maps),
        injective=len({(f1.matrix, f2.matrix) for f1, f2 in pairs}) == len(maps),
        homomorphic_mod_V=hom_V,
        homomorphic_mod_UU=hom_UU,
        images_are_automorphisms=all(is_automorphism(f1) and is_automorphism(f2) for f1, f2 in pairs),
        kernel_trivial=len(kernel) == 1 and kernel[0].is_identity(),
        image_mod_V=len({f1.matrix for f1, _ in pairs}),
        image_mod_UU=len({f2.matrix for _, f2 in pairs}),
        aut_mod_V=len(aut_V),
        aut_mod_UU=len(aut_UU),
    )
    log.debug("Subdirect check: %s", report)
    return report
