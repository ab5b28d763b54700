"""End to end checks of the automorphism theory against brute-force enumeration at desk scale."""

import itertools
import random
from functools import lru_cache

import pytest

from leibnizpy.autos import endo_type1_from_gammas, phi_to_unit, subdirect_check
from leibnizpy.cyclic import CyclicSpec, build_cyclic, cyclic
from leibnizpy.exact import GF, QQ
from leibnizpy.leibniz import centers, lower_central_series, upper_central_series
from leibnizpy.models.enums import CyclicType, SuiteStatus
from leibnizpy.polyring import QuotientRing, enumerate_units, subgroup_I_elements
from leibnizpy.settings import Settings
from leibnizpy.verify import Context, run_verify_suite

GRID = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)]
settings = Settings()


@lru_cache(maxsize=None)
def type_one(q, n):
    return Context(cyclic(GF(q), n, *([0] * (n - 1))), settings=settings)


def assert_passes(ctx, suite_id):
    result = run_verify_suite(ctx, suite_id)
    assert result.status is SuiteStatus.passed, f"{suite_id}: {result.first_failure}"


@pytest.mark.parametrize("q,n", GRID)
def test_type_one_automorphism_count(q, n):
    ctx = type_one(q, n)
    ring = QuotientRing.truncated(GF(q), n)
    expected = (q - 1) * q ** (n - 1)
    assert len(ctx.auts) == expected
    assert len(ctx.auts) == (q - 1) * len(subgroup_I_elements(ring, settings=settings))


@pytest.mark.parametrize("q,n", GRID)
def test_square_zero_partition(q, n):
    ctx = type_one(q, n)
    S = {f.matrix for f in ctx.square_zero}
    A = {f.matrix for f in ctx.auts}
    assert len(ctx.endos) == len(S) + len(A)
    assert not S & A
    assert len(S) == q ** (n - 1)
    assert all((f @ g).is_zero() for f, g in itertools.product(ctx.square_zero, repeat=2))
    assert_passes(ctx, "square-zero")
    assert_passes(ctx, "partition")


@pytest.mark.parametrize("q,n", GRID)
def test_closed_form_equals_oracle(q, n):
    ctx = type_one(q, n)
    field = GF(q)
    closed = {endo_type1_from_gammas(ctx.cyclic, g).matrix for g in itertools.product(field.elements(), repeat=n)}
    assert closed == {f.matrix for f in ctx.endos}
    assert len(closed) == q**n


@pytest.mark.parametrize("q,n", [(2, 3), (2, 4), (3, 2), (3, 3)])
def test_unitriangular_isomorphism(q, n):
    ctx = type_one(q, n)
    UC = [f for f in ctx.auts if f.matrix.scalar(0, 0) == 1]
    images = {f: phi_to_unit(f) for f in UC}
    assert len(set(images.values())) == len(UC) == q ** (n - 1)
    for f, g in itertools.product(UC, repeat=2):
        assert phi_to_unit(f @ g) == images[f] * images[g]
    assert_passes(ctx, "unit-isomorphism")
    assert_passes(ctx, "semidirect")
    assert_passes(ctx, "scalar-map")


@pytest.mark.parametrize("q,n,alpha", [(3, 2, (1,)), (2, 3, (1, 1))])
def test_type_two_centralizer(q, n, alpha):
    ctx = Context(cyclic(GF(q), n, *alpha), settings=settings)
    assert ctx.cyclic.variant is CyclicType.II
    assert len(ctx.centralizer) == q ** (n - 1)
    for suite_id in ("centralizer-normal", "centralizer-monoid", "centralizer-units", "scalar-map"):
        assert_passes(ctx, suite_id)


@pytest.mark.parametrize("n,alpha,force", [(3, (0, 1), False), (4, (0, 0, 1), True)])
def test_type_three_subdirect(n, alpha, force):
    L = cyclic(GF(2), n, *alpha)
    report = subdirect_check(L, force, settings)
    assert report.injective and report.kernel_trivial
    assert report.homomorphic_mod_V and report.homomorphic_mod_UU
    assert report.images_are_automorphisms
    assert report.holds


def random_spec(rng):
    field = rng.choice([QQ, GF(2), GF(3), GF(5)])
    n = rng.randint(2, 6)
    if field.is_finite:
        alpha = [rng.randrange(field.p) for _ in range(n - 1)]
    else:
        alpha = [rng.randint(-3, 3) for _ in range(n - 1)]
    # bias towards the rarer types
    shape = rng.random()
    if shape < 0.25:
        alpha = [0] * (n - 1)
    elif shape < 0.6 and n >= 3:
        alpha[0] = 0
        if not any(alpha):
            alpha[-1] = 1
    return CyclicSpec(field, n, tuple(alpha))


def test_random_structure():
    rng = random.Random(20240611)
    seen = set()
    for _ in range(200):
        L = build_cyclic(random_spec(rng))
        seen.add(L.variant)
        result = run_verify_suite(Context(L, settings=settings), "structure")
        assert result.status is SuiteStatus.passed, f"{L.spec}: {result.first_failure}"
    assert seen == {CyclicType.I, CyclicType.II, CyclicType.III}


@pytest.mark.parametrize("q,n", GRID)
def test_automorphisms_preserve_series(q, n):
    ctx = type_one(q, n)
    L = ctx.algebra
    found = centers(L)
    fixed = [found.left, found.right, found.two_sided, ctx.commutator()]
    fixed += list(lower_central_series(L).distinct) + list(upper_central_series(L).distinct)
    for f in ctx.auts:
        assert all(f.image(sub) == sub for sub in fixed), f.matrix.text_rows()
    for f in ctx.endos:
        assert all(f.image(term) <= term for term in lower_central_series(L).distinct)


@pytest.mark.parametrize("q,n", GRID)
def test_unit_group_counts(q, n):
    ring = QuotientRing.truncated(GF(q), n)
    assert len(enumerate_units(ring, settings=settings)) == (q - 1) * q ** (n - 1)
    assert len(subgroup_I_elements(ring, settings=settings)) == q ** (n - 1)
