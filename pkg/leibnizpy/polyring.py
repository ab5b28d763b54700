"""
Univariate polynomials over an exact field and the quotient rings F[X]/a(X)F[X].

Coefficients are stored in ascending degree without trailing zeros, so the zero polynomial has
no coefficients. Quotient rings keep the monic associate of the supplied modulus; the ideal is
the same, and the original is kept for display.
"""

import itertools
import logging
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import sympy as sp
from sympy.polys.polyerrors import NotInvertible

from .exact import FieldDescriptor, Matrix, Raw
from .exceptions import (
    BothZeroError,
    DivisionByZeroPolyError,
    FieldMismatchError,
    InvalidInputError,
    InvalidScalarError,
    NotAUnitError,
    WrongModulusError,
)
from .settings import Settings, check_guard

log = logging.getLogger("leibniz.polyring")

_X = sp.Symbol("X")


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs: Iterable = ()):
        coeffs = [field.coerce(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs: Tuple[Raw, ...] = tuple(coeffs)

    @classmethod
    def zero(cls, field: FieldDescriptor) -> "Poly":
        return cls(field)

    @classmethod
    def constant(cls, field: FieldDescriptor, c) -> "Poly":
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: FieldDescriptor, degree: int, c=1) -> "Poly":
        return cls(field, [0] * degree + [c])

    @classmethod
    def X(cls, field: FieldDescriptor) -> "Poly":
        return cls.monomial(field, 1)

    @classmethod
    def parse(cls, field: FieldDescriptor, text: str) -> "Poly":
        """
        Parse comma separated ascending coefficients, e.g. ``"1,1,-1"`` for ``1 + X - X^2``.

        Over a prime field a leading minus negates the residue that follows it.
        """
        coeffs = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                raise InvalidScalarError(f"Empty coefficient in {text!r}")
            coeffs.append(field.parse_value(part))
        return cls(field, coeffs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Raw:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (self.field.one,)

    def coefficient(self, k: int) -> Raw:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def padded(self, length: int) -> Tuple[Raw, ...]:
        return tuple(self.coefficient(k) for k in range(length))

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead))

    def _check(self, other: "Poly") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"Cannot combine polynomials over {self.field} and {other.field}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.field.add(self.coefficient(k), other.coefficient(k)) for k in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.field)
        field = self.field
        out = [field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] = field.add(out[i + j], field.mul(x, y))
        return Poly(field, out)

    def scale(self, c) -> "Poly":
        c = self.field.coerce(c)
        return Poly(self.field, [self.field.mul(c, x) for x in self.coeffs])

    def __pow__(self, k: int) -> "Poly":
        result = Poly.constant(self.field, 1)
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.p, self.coeffs))

    def evaluate(self, x: Raw) -> Raw:
        field = self.field
        result = field.zero
        for c in reversed(self.coeffs):
            result = field.add(field.mul(result, x), c)
        return result

    def evaluate_matrix(self, m: Matrix) -> Matrix:
        """g(M) by Horner's rule."""
        ident = Matrix.identity(m.field, m.rows)
        result = Matrix.zeros(m.field, m.rows, m.cols)
        for c in reversed(self.coeffs):
            result = result @ m + ident.scale(c)
        return result

    def format(self, var: str = "X") -> str:
        """Human form in ascending degree, with symmetric residues over prime fields."""
        terms = []
        for k, c in enumerate(self.coeffs):
            s = self.field.signed(c)
            if s == 0:
                continue
            mag = self.field.format_value(abs(s))
            power = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if k == 0:
                body = mag
            elif mag == "1":
                body = power
            else:
                body = f"{mag}*{power}"
            if not terms:
                terms.append(f"-{body}" if s < 0 else body)
            else:
                terms.append(f"{'-' if s < 0 else '+'} {body}")
        return " ".join(terms) if terms else "0"

    def to_strings(self) -> List[str]:
        return [self.field.format_value(c) for c in self.coeffs]

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Poly({self.field}, {self.format()})"


def _to_sympy(poly: Poly) -> sp.Poly:
    field = poly.field
    return sp.Poly([field.to_domain(c) for c in reversed(poly.coeffs)], _X, domain=field.domain)


def _from_sympy(field: FieldDescriptor, poly: sp.Poly) -> Poly:
    domain = field.domain
    return Poly(field, [field.from_domain(domain.from_sympy(c)) for c in reversed(poly.all_coeffs())])


def poly_divmod(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    """
    Long division.

    Returns:
        tuple: quotient and remainder with ``num = quot * den + rem`` and ``deg rem < deg den``.

    Raises:
        DivisionByZeroPolyError: den is zero.
    """
    num._check(den)
    if den.is_zero():
        raise DivisionByZeroPolyError("Polynomial division by zero")
    quot, rem = _to_sympy(num).div(_to_sympy(den))
    return _from_sympy(num.field, quot), _from_sympy(num.field, rem)


def ext_gcd(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """
    Extended Euclid.

    Returns:
        tuple: ``(g, s, t)`` with g monic, ``s*a + t*b = g``.

    Raises:
        BothZeroError: a and b are both zero.
    """
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise BothZeroError("gcd(0, 0) is undefined")
    s, t, g = _to_sympy(a).gcdex(_to_sympy(b))
    field = a.field
    return _from_sympy(field, g), _from_sympy(field, s), _from_sympy(field, t)


class QuotientRing:
    """F[X]/a(X)F[X] for a modulus of degree at least one."""

    __slots__ = ("field", "modulus", "original_modulus")

    def __init__(self, modulus: Poly):
        if modulus.degree < 1:
            raise InvalidInputError(f"Quotient modulus {modulus} must have positive degree")
        self.field = modulus.field
        self.original_modulus = modulus
        self.modulus = modulus.monic()

    @classmethod
    def truncated(cls, field: FieldDescriptor, n: int) -> "QuotientRing":
        """F[X]/X^n F[X]."""
        if n < 1:
            raise InvalidInputError("F[X]/X^n needs n >= 1")
        return cls(Poly.monomial(field, n))

    @property
    def degree(self) -> int:
        return self.modulus.degree

    @property
    def truncation_degree(self) -> Optional[int]:
        """n when the modulus is X^n, else None."""
        if self.modulus == Poly.monomial(self.field, self.degree):
            return self.degree
        return None

    def element(self, value) -> "QuotElement":
        if not isinstance(value, Poly):
            value = Poly(self.field, value)
        return QuotElement(self, value)

    @property
    def one(self) -> "QuotElement":
        return self.element([1])

    @property
    def zero(self) -> "QuotElement":
        return self.element([])

    @property
    def z(self) -> "QuotElement":
        return self.element(Poly.X(self.field))

    def _residues(self, free: int, prefix: Sequence[Raw] = ()) -> Iterator["QuotElement"]:
        for tail in itertools.product(self.field.elements(), repeat=free):
            yield QuotElement._raw(self, Poly(self.field, tuple(prefix) + tail))

    def elements(self, force: bool = False, settings: Optional[Settings] = None) -> List["QuotElement"]:
        """Every residue, in lexicographic order of the ascending coefficient vectors."""
        size = self.field.order**self.degree
        check_guard(size, force, settings)
        return list(self._residues(self.degree))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientRing):
            return NotImplemented
        return self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __str__(self) -> str:
        return f"{self.field}[X]/({self.original_modulus.format()})"

    __repr__ = __str__


class QuotElement:
    """A residue class, kept as the remainder modulo the monic modulus."""

    __slots__ = ("ring", "residue")

    def __init__(self, ring: QuotientRing, value: Poly):
        self.ring = ring
        self.residue = value % ring.modulus

    @classmethod
    def _raw(cls, ring: QuotientRing, residue: Poly) -> "QuotElement":
        x = cls.__new__(cls)
        x.ring = ring
        x.residue = residue
        return x

    def _check(self, other: "QuotElement") -> None:
        if other.ring != self.ring:
            raise FieldMismatchError(f"Residues of {self.ring} and {other.ring} do not mix")

    def __add__(self, other: "QuotElement") -> "QuotElement":
        self._check(other)
        return QuotElement(self.ring, self.residue + other.residue)

    def __sub__(self, other: "QuotElement") -> "QuotElement":
        self._check(other)
        return QuotElement(self.ring, self.residue - other.residue)

    def __neg__(self) -> "QuotElement":
        return QuotElement._raw(self.ring, -self.residue)

    def __mul__(self, other: "QuotElement") -> "QuotElement":
        self._check(other)
        return QuotElement(self.ring, self.residue * other.residue)

    def __pow__(self, k: int) -> "QuotElement":
        base = self if k >= 0 else self.inverse()
        result = self.ring.one
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> "QuotElement":
        return quot_inv(self)

    def is_unit(self) -> bool:
        if self.residue.is_zero():
            return False
        return ext_gcd(self.residue, self.ring.modulus)[0].is_one()

    def coefficients(self) -> Tuple[Raw, ...]:
        """Residue coefficients padded to the ring degree."""
        return self.residue.padded(self.ring.degree)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotElement):
            return NotImplemented
        return self.ring == other.ring and self.residue == other.residue

    def __hash__(self) -> int:
        return hash(self.residue)

    def __str__(self) -> str:
        return self.residue.format("z")

    def __repr__(self) -> str:
        return f"QuotElement({self}, {self.ring})"


def quot_inv(x: QuotElement) -> QuotElement:
    """
    Inverse in the quotient ring, through sympy's polynomial ``invert``.

    Raises:
        NotAUnitError: the residue shares a factor with the modulus; ``gcd`` holds it.
    """
    if x.residue.is_zero():
        raise NotAUnitError(f"0 is not a unit of {x.ring}", gcd=x.ring.modulus)
    try:
        inverse = _to_sympy(x.residue).invert(_to_sympy(x.ring.modulus))
    except NotInvertible:
        g = ext_gcd(x.residue, x.ring.modulus)[0]
        raise NotAUnitError(f"{x} is not a unit of {x.ring}: gcd is {g}", gcd=g)
    return QuotElement(x.ring, _from_sympy(x.ring.field, inverse))


def enumerate_units(ring: QuotientRing, force: bool = False, settings: Optional[Settings] = None) -> List[QuotElement]:
    """
    Every unit of a finite quotient ring, in lexicographic order of the ascending coefficient vectors.

    Raises:
        InfiniteFieldError: the field is Q.
        GuardExceededError: q**deg is above the guard.
    """
    units = [x for x in ring.elements(force, settings) if x.is_unit()]
    log.debug("%s has %s units", ring, len(units))
    return units


def subgroup_I_elements(ring: QuotientRing, force: bool = False, settings: Optional[Settings] = None) -> List[QuotElement]:
    """
    The units ``1 + c_1 z + ... + c_{n-1} z^{n-1}`` of F[X]/X^n F[X].

    Raises:
        WrongModulusError: the modulus is not X^n.
        InfiniteFieldError: the field is Q.
        GuardExceededError: q**(n-1) is above the guard.
    """
    n = ring.truncation_degree
    if n is None:
        raise WrongModulusError(f"{ring} is not a truncated polynomial ring")
    if n == 1:
        return [ring.one]
    check_guard(ring.field.order ** (n - 1), force, settings)
    return list(ring._residues(n - 1, prefix=(ring.field.one,)))
