import itertools
import random
from fractions import Fraction

import pytest

from leibnizpy.exact import GF, QQ, Matrix
from leibnizpy.exceptions import (
    BothZeroError,
    DivisionByZeroPolyError,
    GuardExceededError,
    InfiniteFieldError,
    NotAUnitError,
    WrongModulusError,
)
from leibnizpy.polyring import (
    Poly,
    QuotientRing,
    enumerate_units,
    ext_gcd,
    poly_divmod,
    quot_inv,
    subgroup_I_elements,
)
from leibnizpy.settings import Settings

F2, F3 = GF(2), GF(3)
X2 = Poly.X(F2)
XQ = Poly.X(QQ)


def test_divmod_examples():
    assert poly_divmod(Poly.monomial(QQ, 2), XQ) == (XQ, Poly.zero(QQ))
    quot, rem = poly_divmod(Poly(F2, [1, 0, 1]), Poly(F2, [1, 1]))
    assert quot == Poly(F2, [1, 1]) and rem.is_zero(), "(X+1)^2 = X^2+1 over GF(2)"
    c, d = Poly(QQ, [1, 2]), Poly(QQ, [0, 0, 1])
    assert poly_divmod(c, d) == (Poly.zero(QQ), c)
    with pytest.raises(DivisionByZeroPolyError):
        poly_divmod(c, Poly.zero(QQ))


def test_prime_field_results_are_residues():
    F5 = GF(5)
    quot, rem = poly_divmod(Poly(F5, [1, 0, 3]), Poly(F5, [0, 2]))
    assert quot == Poly(F5, [0, 4]) and rem == Poly(F5, [1])
    g, s, t = ext_gcd(Poly(F5, [2, 1]), Poly(F5, [3, 1]))
    assert g.is_one() and all(0 <= c < 5 for c in s.coeffs + t.coeffs)
    ring = QuotientRing.truncated(F5, 2)
    assert quot_inv(ring.element([2])).coefficients() == (3, 0)
    assert quot_inv(ring.element([1, 1])).coefficients() == (1, 4)


def test_ext_gcd_examples():
    g, s, t = ext_gcd(XQ, Poly.monomial(QQ, 2))
    assert g == XQ
    g, s, t = ext_gcd(Poly(QQ, [-1, 1]), Poly(QQ, [1, 1]))
    assert g == Poly.constant(QQ, 1)
    assert s == Poly.constant(QQ, Fraction(-1, 2)) and t == Poly.constant(QQ, Fraction(1, 2))
    a = Poly(QQ, [1, 0, 2])
    g, s, t = ext_gcd(a, Poly.zero(QQ))
    assert g == a.monic() and s == Poly.constant(QQ, Fraction(1, 2)) and t.is_zero()
    with pytest.raises(BothZeroError):
        ext_gcd(Poly.zero(QQ), Poly.zero(QQ))


def test_bezout_random():
    rng = random.Random(7)
    for field in (QQ, F2, GF(5)):
        for _ in range(30):
            a = Poly(field, [rng.randint(-4, 4) for _ in range(rng.randint(0, 5))])
            b = Poly(field, [rng.randint(-4, 4) for _ in range(rng.randint(0, 5))])
            if a.is_zero() and b.is_zero():
                continue
            g, s, t = ext_gcd(a, b)
            assert s * a + t * b == g, f"Bezout fails for {a}, {b}"
            assert g.lead == field.one
            assert (a % g).is_zero() and (b % g).is_zero()


def test_quot_inv_examples():
    for n in range(1, 6):
        ring = QuotientRing.truncated(QQ, n)
        x = ring.one - ring.z
        expected = ring.element([1] * n)
        assert quot_inv(x) == expected, "(1-z)(1+z+...+z^(n-1)) = 1"
    ring = QuotientRing(Poly(F3, [-1, 0, 1]))
    assert quot_inv(ring.z) == ring.z
    ring = QuotientRing.truncated(F2, 3)
    with pytest.raises(NotAUnitError) as info:
        quot_inv(ring.z)
    assert info.value.gcd == X2


def test_unit_counts():
    assert len(enumerate_units(QuotientRing.truncated(F2, 3))) == 4
    assert len(enumerate_units(QuotientRing.truncated(F3, 2))) == 6
    assert len(enumerate_units(QuotientRing(Poly(F2, [1, 1, 1])))) == 3
    with pytest.raises(InfiniteFieldError):
        enumerate_units(QuotientRing.truncated(QQ, 2))


def test_unit_order_is_lexicographic():
    units = enumerate_units(QuotientRing.truncated(F3, 2))
    assert [u.coefficients() for u in units] == [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]


def test_subgroup_I_examples():
    ring = QuotientRing.truncated(F2, 3)
    elements = subgroup_I_elements(ring)
    assert [str(x) for x in elements] == ["1", "1 + z^2", "1 + z", "1 + z + z^2"]
    assert len(subgroup_I_elements(QuotientRing.truncated(F3, 2))) == 3
    assert subgroup_I_elements(QuotientRing.truncated(QQ, 1)) == [QuotientRing.truncated(QQ, 1).one]
    with pytest.raises(WrongModulusError):
        subgroup_I_elements(QuotientRing(Poly(F2, [1, 1, 1])))


def test_subgroup_I_is_a_subgroup():
    ring = QuotientRing.truncated(F3, 3)
    elements = set(subgroup_I_elements(ring))
    for x, y in itertools.product(elements, repeat=2):
        assert x * y in elements
    for x in elements:
        assert quot_inv(x) in elements and quot_inv(x) * x == ring.one


def test_monic_associate_does_not_change_units():
    # a(X) = 1 - X over GF(3) as written, and its monic associate X - 1
    written = QuotientRing(Poly.parse(F3, "1,-1"))
    monic = QuotientRing(Poly(F3, [-1, 1]))
    assert written == monic
    assert [u.coefficients() for u in enumerate_units(written)] == [u.coefficients() for u in enumerate_units(monic)]
    assert str(written) == "GF(3)[X]/(1 - X)"


def test_guard():
    tight = Settings(guard_bits=3)
    with pytest.raises(GuardExceededError):
        enumerate_units(QuotientRing.truncated(F2, 4), settings=tight)
    assert len(enumerate_units(QuotientRing.truncated(F2, 4), force=True, settings=Settings(guard_bits=3, forced_guard_bits=4))) == 8


def test_format_and_parse():
    assert Poly.parse(QQ, "1,1,-1").format() == "1 + X - X^2"
    assert Poly(F3, [1, 2]).format() == "1 - X"
    assert Poly(QQ, [0, Fraction(1, 2), 0, -3]).format() == "1/2*X - 3*X^3"
    assert Poly.zero(QQ).format() == "0"


def test_evaluate_matrix():
    companion = Matrix(QQ, [[0, 1], [1, 0]])
    assert (XQ * XQ).evaluate_matrix(companion) == Matrix.identity(QQ, 2)
    assert Poly(QQ, [2, 3]).evaluate_matrix(companion) == Matrix(QQ, [[2, 3], [3, 2]])
    assert Poly(QQ, [1, 2, 3]).evaluate(Fraction(2)) == 17
