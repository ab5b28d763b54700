"""
Named verification suites.

Each suite checks one structural property of an algebra and its endomorphism monoid, using the
enumeration oracles over prime fields. Suites return a `VerifySuiteResult`; a failing check is a
result with status ``fail`` and a witness, never an exception. Guard trips propagate.
"""

import itertools
import logging
from functools import cached_property
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from .autos import (
    AutEnumeration,
    LinearMap,
    c_scalar,
    centralizer_D_membership,
    d_f_polynomial,
    decompose_UD,
    diagonal_automorphism,
    endo_from_generator_image,
    endo_from_polynomial,
    endo_type1_from_gammas,
    enumerate_endomorphisms,
    in_subgroup_U,
    is_endomorphism,
    is_in_S,
    phi_to_unit,
    quotient_ring,
    subdirect_check,
    theta_scalar,
    unit_to_unitriangular,
    unitriangular_matrix,
)
from .cyclic import CyclicAlgebra, build_cyclic, c_basis_algebra, canonical_c, commutator_ideal, rebase_type3
from .exact import Subspace
from .exceptions import UnknownSuiteError, VerificationError
from .leibniz import (
    LeibnizAlgebra,
    bracket,
    centers,
    check_left_leibniz,
    is_ideal,
    is_nilpotent,
    leib_kernel,
    lower_central_series,
    product_subspace,
    upper_central_series,
)
from .models.enums import CyclicType, EndoKind, SuiteStatus
from .models.reports import CheckResult, VerifySuiteResult
from .polyring import QuotientRing, enumerate_units, subgroup_I_elements
from .settings import Settings, default_settings

log = logging.getLogger("leibniz.verify")

AlgebraLike = Union[CyclicAlgebra, LeibnizAlgebra]

WRONG_TYPE = "skipped: wrong type"
NEEDS_FINITE = "skipped: needs a prime field"


class Context:
    """One algebra plus lazily enumerated endomorphisms, shared by the suites of a run."""

    def __init__(self, algebra: AlgebraLike, force: bool = False, settings: Optional[Settings] = None):
        self.owner = algebra
        self.cyclic = algebra if isinstance(algebra, CyclicAlgebra) else None
        self.algebra: LeibnizAlgebra = algebra.algebra if self.cyclic else algebra
        self.field = self.algebra.field
        self.n = self.algebra.dim
        self.force = force
        self.settings = settings or default_settings()

    @property
    def q(self) -> int:
        return self.field.order

    @cached_property
    def endos(self) -> AutEnumeration:
        return enumerate_endomorphisms(self.owner, EndoKind.endomorphisms, self.force, self.settings)

    @cached_property
    def auts(self) -> AutEnumeration:
        maps = tuple(f for f in self.endos.maps if f.is_invertible())
        return AutEnumeration(self.owner, EndoKind.automorphisms, maps, self.endos.candidates)

    @cached_property
    def square_zero(self) -> List[LinearMap]:
        return [f for f in self.endos.maps if (f @ f).is_zero()]

    @cached_property
    def centralizer(self) -> List[LinearMap]:
        return [f for f in self.endos.maps if centralizer_D_membership(f)]

    def commutator(self) -> Subspace:
        full = self.algebra.full()
        return product_subspace(self.algebra, full, full)


class Checks:
    def __init__(self, suite: str):
        self.suite = suite
        self.results: List[CheckResult] = []

    def add(self, check_id: str, ok: bool, witness: str = "") -> bool:
        status = SuiteStatus.passed if ok else SuiteStatus.failed
        if not ok:
            log.warning("Suite %s: check %s failed: %s", self.suite, check_id, witness)
        self.results.append(CheckResult(id=check_id, status=status, witness=witness))
        return ok

    def first(self, check_id: str, items, predicate: Callable, describe: Callable = repr, summary: str = "") -> bool:
        """Passes when ``predicate`` holds for every item; the first failing item is the witness."""
        for item in items:
            if not predicate(item):
                return self.add(check_id, False, describe(item))
        return self.add(check_id, True, summary)


def _matrix_text(f: LinearMap) -> str:
    return str(f.matrix.text_rows())


def _pair_text(pair: Tuple[LinearMap, LinearMap]) -> str:
    return f"{_matrix_text(pair[0])} and {_matrix_text(pair[1])}"


def suite_structure(ctx: Context, checks: Checks) -> None:
    L = ctx.algebra
    identity = check_left_leibniz(L)
    checks.add("left-leibniz-identity", identity.holds, "" if identity.holds else f"triple {identity.triple}")
    found = centers(L)
    checks.add("leib-kernel-in-left-center", leib_kernel(L) <= found.left)
    checks.add("left-center-is-ideal", is_ideal(L, found.left))
    if ctx.cyclic is None:
        return
    C = ctx.cyclic
    span = commutator_ideal(C)
    checks.add("commutator-is-span-a2-an", ctx.commutator() == span)
    checks.add("leib-kernel-is-commutator", leib_kernel(L) == span)
    nilpotent, klass = is_nilpotent(L)
    if C.variant is CyclicType.I:
        checks.add("nilpotent-of-class-n", (nilpotent, klass) == (True, C.n), f"class {klass}")
    else:
        checks.add("not-nilpotent", not nilpotent)
    if C.variant is CyclicType.II:
        c, companion = canonical_c(C)
        line = Subspace(ctx.field, ctx.n, [c.coords])
        checks.add("c-squares-to-zero", bracket(c, c).is_zero(), str(bracket(c, c)))
        checks.add("right-center-is-c", found.right == line, repr(found.right))
        checks.add("direct-sum-with-c", span + line == L.full() and span.intersect(line).dim == 0)
        checks.add("companion-invertible", companion.is_invertible())
    if C.variant is CyclicType.III:
        result = rebase_type3(C)
        checks.add("transition-invertible", result.T.is_invertible())
        checks.add("V-is-ideal", is_ideal(L, result.V_sub))
        checks.add("UU-is-ideal", is_ideal(L, result.UU_sub))
        d = [L.element(row) for row in result.T.grid]
        checks.first(
            "a1-acts-like-d1",
            range(result.t - 1, C.n),
            lambda j: bracket(C.a(1), d[j]) == bracket(d[0], d[j]),
            lambda j: f"d{j + 1}",
        )
        checks.add("mod-V-is-type-I", result.quotient_mod_V == build_cyclic(result.spec_mod_V).algebra)
        checks.add("mod-UU-is-type-II", result.quotient_mod_UU == c_basis_algebra(build_cyclic(result.spec_mod_UU)))


def suite_centers(ctx: Context, checks: Checks) -> None:
    found = centers(ctx.algebra)
    auts = ctx.auts.maps
    summary = f"{len(auts)} automorphisms"
    for check_id, subspace in (
        ("fixes-left-center", found.left),
        ("fixes-right-center", found.right),
        ("fixes-center", found.two_sided),
        ("fixes-commutator", ctx.commutator()),
    ):
        checks.first(check_id, auts, lambda f: f.image(subspace) == subspace, _matrix_text, summary)


def suite_series(ctx: Context, checks: Checks) -> None:
    lower = lower_central_series(ctx.algebra).distinct
    upper = upper_central_series(ctx.algebra).distinct
    checks.first(
        "endomorphisms-preserve-lower-terms",
        ctx.endos.maps,
        lambda f: all(f.image(term) <= term for term in lower),
        _matrix_text,
        f"{len(ctx.endos)} endomorphisms, {len(lower)} terms",
    )
    checks.first(
        "automorphisms-fix-lower-terms",
        ctx.auts.maps,
        lambda f: all(f.image(term) == term for term in lower),
        _matrix_text,
    )
    checks.first(
        "automorphisms-fix-upper-terms",
        ctx.auts.maps,
        lambda f: all(f.image(term) == term for term in upper),
        _matrix_text,
        f"{len(upper)} terms",
    )


def suite_square_zero(ctx: Context, checks: Checks) -> None:
    S = ctx.square_zero
    members = {f.matrix for f in S}
    try:
        agree = all(is_in_S(f) == (f.matrix in members) for f in ctx.endos.maps)
        checks.add("characterizations-agree", agree)
    except VerificationError as e:
        checks.add("characterizations-agree", False, e.message)
    checks.add("size-q-to-n-minus-1", len(S) == ctx.q ** (ctx.n - 1), f"|S| = {len(S)}")
    checks.first(
        "products-vanish",
        itertools.product(S, repeat=2),
        lambda pair: (pair[0] @ pair[1]).is_zero(),
        _pair_text,
        f"{len(S) ** 2} products",
    )
    checks.first(
        "two-sided-ideal",
        itertools.product(S, ctx.endos.maps),
        lambda pair: (pair[0] @ pair[1]).matrix in members and (pair[1] @ pair[0]).matrix in members,
        _pair_text,
    )


def suite_closed_form(ctx: Context, checks: Checks) -> None:
    C = ctx.cyclic
    gammas = list(itertools.product(ctx.field.elements(), repeat=ctx.n))
    closed = [endo_type1_from_gammas(C, g) for g in gammas]
    checks.first(
        "matches-recurrence",
        zip(gammas, closed),
        lambda item: endo_from_generator_image(C, item[0]) == item[1],
        lambda item: f"gamma {item[0]}",
        f"{len(gammas)} parameter vectors",
    )
    checks.first("all-endomorphisms", closed, lambda f: is_endomorphism(f).holds, _matrix_text)
    oracle = {f.matrix for f in ctx.endos.maps}
    family = {f.matrix for f in closed}
    checks.add(
        "equals-oracle",
        family == oracle and len(family) == len(closed),
        f"closed form {len(family)}, oracle {len(oracle)}",
    )


def suite_partition(ctx: Context, checks: Checks) -> None:
    S = {f.matrix for f in ctx.square_zero}
    A = {f.matrix for f in ctx.auts.maps}
    E = {f.matrix for f in ctx.endos.maps}
    checks.add("disjoint", not (S & A))
    checks.add("covers-endomorphisms", S | A == E, f"|End| = {len(E)}, |S| = {len(S)}, |Aut| = {len(A)}")
    expected = (ctx.q - 1) * ctx.q ** (ctx.n - 1)
    checks.add("automorphism-count", len(A) == expected, f"|Aut| = {len(A)}, expected {expected}")


def suite_scalar_map(ctx: Context, checks: Checks) -> None:
    auts = ctx.auts.maps
    checks.first(
        "homomorphism",
        itertools.product(auts, repeat=2),
        lambda pair: theta_scalar(pair[0] @ pair[1]) == theta_scalar(pair[0]) * theta_scalar(pair[1]),
        _pair_text,
        f"{len(auts) ** 2} products",
    )
    span = commutator_ideal(ctx.cyclic)
    a1 = ctx.algebra.unit(0)
    U = [f for f in auts if in_subgroup_U(f)]
    checks.first(
        "kernel-is-U",
        auts,
        lambda f: (theta_scalar(f) == 1) == span.contains([ctx.field.sub(x, y) for x, y in zip(f(a1), a1)]),
        _matrix_text,
        f"|U| = {len(U)}",
    )
    index = len(auts) // len(U) if U else 0
    checks.add(
        "index-divides-q-minus-1",
        bool(U) and len(auts) % len(U) == 0 and (ctx.q - 1) % index == 0,
        f"|G/U| = {index}",
    )


def suite_semidirect(ctx: Context, checks: Checks) -> None:
    auts = ctx.auts.maps
    checks.first(
        "decomposes",
        auts,
        lambda f: decompose_UD(f).reassemble() == f.matrix,
        _matrix_text,
        f"{len(auts)} automorphisms",
    )
    UC = [f for f in auts if in_subgroup_U(f)]
    members = {f.matrix for f in UC}
    expected = {unitriangular_matrix(ctx.field, u) for u in itertools.product(ctx.field.elements(), repeat=ctx.n - 1)}
    checks.add("unitriangular-part", members == expected, f"|UC| = {len(members)}")
    checks.first(
        "unitriangular-normal",
        itertools.product(auts, UC),
        lambda pair: (pair[0] @ pair[1] @ pair[0].inverse()).matrix in members,
        _pair_text,
    )
    diagonal = [diagonal_automorphism(ctx.cyclic, g) for g in ctx.field.elements() if g]
    meet = [f for f in diagonal if f.matrix in members]
    checks.add("trivial-intersection", len(meet) == 1 and meet[0].is_identity())
    checks.add("order-is-product", len(auts) == len(UC) * len(diagonal), f"{len(UC)} x {len(diagonal)}")


def suite_unit_isomorphism(ctx: Context, checks: Checks) -> None:
    UC = [f for f in ctx.auts.maps if in_subgroup_U(f)]
    ring = QuotientRing.truncated(ctx.field, ctx.n)
    target = subgroup_I_elements(ring, ctx.force, ctx.settings)
    images = [phi_to_unit(f) for f in UC]
    checks.add(
        "bijective",
        len(set(images)) == len(UC) and set(images) == set(target),
        f"|UC| = {len(UC)}, |I| = {len(target)}",
    )
    image = dict(zip(UC, images))
    checks.first(
        "multiplicative",
        itertools.product(UC, repeat=2),
        lambda pair: phi_to_unit(pair[0] @ pair[1]) == image[pair[0]] * image[pair[1]],
        _pair_text,
        f"{len(UC) ** 2} pairs",
    )
    checks.first("inverse", UC, lambda f: unit_to_unitriangular(image[f]) == f.matrix, _matrix_text)
    units = enumerate_units(ring, ctx.force, ctx.settings)
    expected = (ctx.q - 1) * ctx.q ** (ctx.n - 1)
    checks.add("unit-count", len(units) == expected, f"|U(F[X]/X^n)| = {len(units)}")


def suite_centralizer_normal(ctx: Context, checks: Checks) -> None:
    auts = ctx.auts.maps
    C = [f for f in ctx.centralizer if f.is_invertible()]
    members = {f.matrix for f in C}
    checks.first(
        "normal-in-automorphisms",
        itertools.product(auts, C),
        lambda pair: (pair[0] @ pair[1] @ pair[0].inverse()).matrix in members,
        _pair_text,
        f"|C| = {len(C)}, |Aut| = {len(auts)}",
    )


def suite_centralizer_monoid(ctx: Context, checks: Checks) -> None:
    D = ctx.centralizer
    ring = quotient_ring(ctx.cyclic)
    residues = ring.elements(ctx.force, ctx.settings)
    checks.add("size-q-to-n-minus-1", len(D) == ctx.q ** (ctx.n - 1), f"|D| = {len(D)}")
    polys = {f: d_f_polynomial(f) for f in D}
    checks.add(
        "bijective",
        len(set(polys.values())) == len(D) and set(polys.values()) == set(residues),
        f"{len(residues)} residues of {ring}",
    )
    checks.first(
        "composition-is-multiplication",
        itertools.product(D, repeat=2),
        lambda pair: d_f_polynomial(pair[0] @ pair[1]) == polys[pair[0]] * polys[pair[1]],
        _pair_text,
        f"{len(D) ** 2} pairs",
    )
    members = set(D)
    checks.first(
        "polynomial-round-trip",
        residues,
        lambda r: endo_from_polynomial(ctx.cyclic, r) in members and d_f_polynomial(endo_from_polynomial(ctx.cyclic, r)) == r,
        str,
    )


def suite_centralizer_units(ctx: Context, checks: Checks) -> None:
    auts = ctx.auts.maps
    C = [f for f in ctx.centralizer if f.is_invertible()]
    ring = quotient_ring(ctx.cyclic)
    units = enumerate_units(ring, ctx.force, ctx.settings)
    images = {d_f_polynomial(f) for f in C}
    checks.add("units-match", images == set(units) and len(images) == len(C), f"|C| = {len(C)}, |U| = {len(units)}")
    checks.first(
        "scalar-action-homomorphism",
        itertools.product(auts, repeat=2),
        lambda pair: c_scalar(pair[0] @ pair[1]) == c_scalar(pair[0]) * c_scalar(pair[1]),
        _pair_text,
    )
    kernel = {f.matrix for f in auts if c_scalar(f) == 1}
    checks.add("kernel-is-C", kernel == {f.matrix for f in C})
    index = len(auts) // len(C) if C else 0
    observed = sorted({int(c_scalar(f).value) for f in auts})
    checks.add(
        "index-divides-q-minus-1",
        bool(C) and len(auts) % len(C) == 0 and (ctx.q - 1) % index == 0,
        f"|G/C| = {index}, scalars {observed}",
    )


def suite_subdirect(ctx: Context, checks: Checks) -> None:
    report = subdirect_check(ctx.cyclic, ctx.force, ctx.settings, enumeration=ctx.auts)
    sizes = (
        f"|Aut| = {report.aut_order}, images {report.image_mod_V} of {report.aut_mod_V}"
        f" and {report.image_mod_UU} of {report.aut_mod_UU}"
    )
    checks.add("injective", report.injective, sizes)
    checks.add("homomorphic-mod-V", report.homomorphic_mod_V)
    checks.add("homomorphic-mod-UU", report.homomorphic_mod_UU)
    checks.add("images-are-automorphisms", report.images_are_automorphisms)
    checks.add("trivial-kernel", report.kernel_trivial)


class Suite:
    def __init__(
        self,
        run: Callable[[Context, Checks], None],
        types: Optional[Sequence[CyclicType]] = None,
        finite: bool = True,
    ):
        self.run = run
        self.types = tuple(types) if types is not None else None
        self.finite = finite


ALL_TYPES = (CyclicType.I, CyclicType.II, CyclicType.III)

SUITES: Dict[str, Suite] = {
    "structure": Suite(suite_structure, finite=False),
    "centers": Suite(suite_centers),
    "series": Suite(suite_series),
    "square-zero": Suite(suite_square_zero, [CyclicType.I]),
    "closed-form": Suite(suite_closed_form, [CyclicType.I]),
    "partition": Suite(suite_partition, [CyclicType.I]),
    "scalar-map": Suite(suite_scalar_map, ALL_TYPES),
    "semidirect": Suite(suite_semidirect, [CyclicType.I]),
    "unit-isomorphism": Suite(suite_unit_isomorphism, [CyclicType.I]),
    "centralizer-normal": Suite(suite_centralizer_normal, [CyclicType.II]),
    "centralizer-monoid": Suite(suite_centralizer_monoid, [CyclicType.II]),
    "centralizer-units": Suite(suite_centralizer_units, [CyclicType.II]),
    "subdirect": Suite(suite_subdirect, [CyclicType.III]),
}


def run_verify_suite(ctx: Union[Context, AlgebraLike], suite_id: str) -> VerifySuiteResult:
    """
    Run one suite.

    Raises:
        UnknownSuiteError: no suite has this id.
        GuardExceededError: an enumeration is above the guard.
    """
    if not isinstance(ctx, Context):
        ctx = Context(ctx)
    suite = SUITES.get(suite_id)
    if suite is None:
        raise UnknownSuiteError(f"Unknown suite {suite_id!r}; choose from {', '.join(SUITES)} or all")
    if suite.types is not None and (ctx.cyclic is None or ctx.cyclic.variant not in suite.types):
        log.info("Suite %s skipped: wrong type", suite_id)
        return VerifySuiteResult(suite=suite_id, status=SuiteStatus.skipped, reason=WRONG_TYPE)
    if suite.finite and not ctx.field.is_finite:
        log.info("Suite %s skipped over %s", suite_id, ctx.field)
        return VerifySuiteResult(suite=suite_id, status=SuiteStatus.skipped, reason=NEEDS_FINITE)
    log.info("Suite %s started", suite_id)
    checks = Checks(suite_id)
    try:
        suite.run(ctx, checks)
    except VerificationError as e:
        checks.add("consistency", False, e.message)
    failed = any(c.status is SuiteStatus.failed for c in checks.results)
    status = SuiteStatus.failed if failed else SuiteStatus.passed
    log.info("Suite %s finished: %s", suite_id, status.value)
    return VerifySuiteResult(suite=suite_id, status=status, checks=checks.results)


def parse_suite_ids(text: str) -> List[str]:
    """``all`` or a comma separated list of suite ids, validated and deduplicated in order."""
    ids = [part.strip() for part in text.split(",") if part.strip()]
    if not ids:
        raise UnknownSuiteError("No suite given")
    if "all" in ids:
        return list(SUITES)
    for suite_id in ids:
        if suite_id not in SUITES:
            raise UnknownSuiteError(f"Unknown suite {suite_id!r}; choose from {', '.join(SUITES)} or all")
    return list(dict.fromkeys(ids))


def run_suites(
    algebra: AlgebraLike, suites: str = "all", force: bool = False, settings: Optional[Settings] = None
) -> List[VerifySuiteResult]:
    ctx = Context(algebra, force, settings)
    return [run_verify_suite(ctx, suite_id) for suite_id in parse_suite_ids(suites)]
