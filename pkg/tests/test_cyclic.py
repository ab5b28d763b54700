import pytest

from leibnizpy.cyclic import (
    CyclicSpec,
    OperatorAction,
    annihilator_polynomial,
    build_cyclic,
    c_basis_algebra,
    canonical_c,
    classify,
    commutator_ideal,
    cyclic,
    from_lie_action,
    from_operator_action,
    rebase_type3,
)
from leibnizpy.exact import GF, QQ, Matrix, Subspace
from leibnizpy.exceptions import (
    BadSpecError,
    DependentOperatorsError,
    NotClosedUnderCommutatorError,
    SingularOperatorError,
    WrongTypeError,
)
from leibnizpy.leibniz import (
    bracket,
    centers,
    check_left_leibniz,
    is_ideal,
    is_nilpotent,
    leib_kernel,
    product_subspace,
    rebased,
)
from leibnizpy.models.enums import CyclicType
from leibnizpy.polyring import Poly

F2, F3 = GF(2), GF(3)


def test_build_examples():
    L = cyclic(QQ, 3, 0, 0)
    assert L.tag.variant is CyclicType.I
    assert bracket(L.a(1), L.a(3)).is_zero()
    L = cyclic(F3, 2, 1)
    assert L.tag.variant is CyclicType.II
    assert bracket(L.a(1), L.a(2)) == L.a(2)
    L = cyclic(F2, 3, 0, 1)
    assert L.tag.variant is CyclicType.III and L.tag.t == 3
    assert str(L.tag) == "type III (t=3)"


def test_bad_specs():
    with pytest.raises(BadSpecError):
        CyclicSpec(QQ, 3, (1,))
    with pytest.raises(BadSpecError):
        CyclicSpec(QQ, 0, ())
    with pytest.raises(BadSpecError):
        CyclicSpec(F3, 2, ("7",))
    with pytest.raises(BadSpecError):
        CyclicSpec(F3, 2, ("-7",))
    with pytest.raises(BadSpecError):
        build_cyclic("n=3")


def test_negative_residue_alpha():
    spec = CyclicSpec(F3, 2, ("-1",))
    assert spec.alpha == (2,), "a leading minus negates the residue"
    assert spec == CyclicSpec(F3, 2, ("2",))
    assert CyclicSpec(F2, 3, ("-0", "-1")).alpha == (0, 1)
    assert classify(CyclicSpec(GF(5), 3, ("0", "-2"))).t == 3


def test_dimension_one_is_abelian_type_one():
    L = cyclic(QQ, 1)
    assert L.tag.variant is CyclicType.I
    assert L.algebra.tensor == {}
    assert is_nilpotent(L.algebra) == (True, 1)


def test_classify_examples():
    assert classify(CyclicSpec(QQ, 4, (0, 0, 0))).variant is CyclicType.I
    assert classify(CyclicSpec(QQ, 3, (5, 0))).variant is CyclicType.II
    tag = classify(CyclicSpec(QQ, 4, (0, 0, 1)))
    assert tag.variant is CyclicType.III and tag.t == 4


def test_canonical_c_examples():
    L = cyclic(F3, 2, 1)
    c, companion = canonical_c(L)
    assert c == L.a(1) - L.a(2)
    assert bracket(c, c).is_zero()
    L = cyclic(QQ, 3, 1, 0)
    c, companion = canonical_c(L)
    assert c == L.a(1) - L.a(3)
    assert companion == Matrix(QQ, [[0, 1], [1, 0]])
    with pytest.raises(WrongTypeError):
        canonical_c(cyclic(QQ, 3, 0, 0))


def test_canonical_c_structure():
    L = cyclic(QQ, 4, 2, -1, 3)
    c, companion = canonical_c(L)
    assert bracket(c, c).is_zero()
    assert centers(L.algebra).right == Subspace(QQ, 4, [c.coords])
    assert commutator_ideal(L) + Subspace(QQ, 4, [c.coords]) == L.algebra.full()
    assert companion.is_invertible()
    for k in range(2, 5):
        image = bracket(c, L.a(k)).coords[1:]
        assert image == companion.col(k - 2), "companion columns are [c, a_k]"


def test_annihilator_polynomial():
    assert annihilator_polynomial(cyclic(F3, 2, 1)).format() == "1 - X"
    assert annihilator_polynomial(cyclic(QQ, 3, 1, 1)) == Poly(QQ, [1, 1, -1])
    with pytest.raises(WrongTypeError):
        annihilator_polynomial(cyclic(F2, 3, 0, 1))


def test_rebase_n3():
    L = cyclic(F2, 3, 0, 1)
    result = rebase_type3(L)
    assert result.t == 3 and result.beta == (1,), "beta_3 = -1 = 1 over GF(2)"
    assert result.T == Matrix(F2, [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert result.V_sub == Subspace(F2, 3, [[0, 0, 1]])
    assert result.UU_sub == Subspace(F2, 3, [[0, 1, 1]])
    d1, d2 = (L.algebra.element(row) for row in result.T.grid[:2])
    assert bracket(d1, d2).is_zero()


def test_rebase_n3_rationals():
    L = cyclic(QQ, 3, 0, 1)
    result = rebase_type3(L)
    assert result.beta == (-1,)
    assert result.T.row(0) == (1, -1, 0) and result.T.row(1) == (0, 1, -1)


def test_rebase_n4():
    L = cyclic(QQ, 4, 0, 0, 1)
    result = rebase_type3(L)
    assert result.t == 4
    assert result.T.row(2) == (0, 0, 1, -1)
    assert result.U_sub.dim == 3 and result.V_sub == Subspace(QQ, 4, [[0, 0, 0, 1]])
    assert is_ideal(L.algebra, result.V_sub) and is_ideal(L.algebra, result.UU_sub)
    with pytest.raises(WrongTypeError):
        rebase_type3(cyclic(QQ, 3, 1, 0))


@pytest.mark.parametrize(
    "spec",
    [
        CyclicSpec(QQ, 5, (0, 2, -1, 3)),
        CyclicSpec(QQ, 5, (0, 0, 0, 7)),
        CyclicSpec(GF(5), 6, (0, 0, 3, 0, 1)),
        CyclicSpec(F3, 4, (0, 2, 2)),
    ],
)
def test_rebase_structure(spec):
    L = build_cyclic(spec)
    result = rebase_type3(L)
    t, n = result.t, spec.n
    assert result.T.is_invertible()
    assert result.U_sub.intersect(result.V_sub).dim == 0
    assert result.U_sub.dim == t - 1 and result.V_sub.dim == n - t + 1
    assert is_ideal(L.algebra, result.V_sub) and is_ideal(L.algebra, result.UU_sub)
    assert product_subspace(L.algebra, result.U_sub, result.U_sub) <= result.UU_sub + result.V_sub
    d = [L.algebra.element(row) for row in result.T.grid]
    for j in range(t - 2):
        assert bracket(d[0], d[j]) == d[j + 1]
    assert bracket(d[0], d[t - 2]).is_zero()
    for j in range(t - 1, n):
        assert bracket(L.a(1), d[j]) == bracket(d[0], d[j])
    assert result.quotient_mod_V == build_cyclic(result.spec_mod_V).algebra
    assert result.quotient_mod_UU == c_basis_algebra(build_cyclic(result.spec_mod_UU))
    assert build_cyclic(result.spec_mod_UU).tag.variant is CyclicType.II


def test_from_operator_action_examples():
    built = from_operator_action(1, Matrix(F3, [[1]]))
    assert check_left_leibniz(built).holds
    # a1 -> c + e1, a2 -> e1
    assert rebased(built, Matrix(F3, [[1, 1], [0, 1]])) == cyclic(F3, 2, 1).algebra
    L = cyclic(QQ, 3, 1, 0)
    built = from_operator_action(2, canonical_c(L).companion)
    assert built == c_basis_algebra(L)
    with pytest.raises(SingularOperatorError):
        from_operator_action(2, Matrix(QQ, [[1, 2], [2, 4]]))


def test_companion_round_trip():
    for L in (cyclic(GF(5), 4, 3, 0, 1), cyclic(QQ, 5, -1, 0, 2, 1), cyclic(F2, 3, 1, 1)):
        assert from_operator_action(L.n - 1, canonical_c(L).companion) == c_basis_algebra(L)


def test_from_lie_action_examples():
    built = from_lie_action(OperatorAction(QQ, 1, (Matrix.identity(QQ, 1),)))
    assert built.dim == 2 and built.tensor == {(1, 0): (1, 0)}
    abelian = from_lie_action(OperatorAction(QQ, 2, (Matrix.zeros(QQ, 2, 2),)))
    assert abelian.dim == 3 and abelian.tensor == {}
    with pytest.raises(NotClosedUnderCommutatorError) as info:
        from_lie_action(OperatorAction(QQ, 2, (Matrix(QQ, [[0, 1], [0, 0]]), Matrix(QQ, [[0, 0], [1, 0]]))))
    assert info.value.pair == (0, 1)


def test_from_lie_action_sl2():
    e = Matrix(QQ, [[0, 1], [0, 0]])
    f = Matrix(QQ, [[0, 0], [1, 0]])
    h = Matrix(QQ, [[1, 0], [0, -1]])
    built = from_lie_action(OperatorAction(QQ, 2, (e, h, f)))
    assert built.dim == 5 and check_left_leibniz(built).holds
    assert leib_kernel(built) == Subspace.coordinate(QQ, 5, [0, 1])
    with pytest.raises(DependentOperatorsError):
        from_lie_action(OperatorAction(QQ, 2, (e, f, h, h)))


@pytest.mark.parametrize("n,alpha", [(2, (0,)), (3, (0, 0)), (5, (0, 0, 0, 0))])
def test_type_one_nilpotent_class(n, alpha):
    L = build_cyclic(CyclicSpec(GF(5), n, alpha))
    assert is_nilpotent(L.algebra) == (True, n)
    assert leib_kernel(L.algebra) == commutator_ideal(L)
