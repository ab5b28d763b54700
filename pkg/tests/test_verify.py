import pytest

from leibnizpy.cyclic import cyclic
from leibnizpy.exact import GF, QQ
from leibnizpy.exceptions import GuardExceededError, UnknownSuiteError
from leibnizpy.leibniz import LeibnizAlgebra
from leibnizpy.models.enums import SuiteStatus
from leibnizpy.settings import Settings
from leibnizpy.verify import (
    NEEDS_FINITE,
    SUITES,
    WRONG_TYPE,
    Context,
    Suite,
    parse_suite_ids,
    run_suites,
    run_verify_suite,
)

F2, F3 = GF(2), GF(3)
settings = Settings()

TYPE_I_SUITES = {"square-zero", "closed-form", "partition", "semidirect", "unit-isomorphism"}
TYPE_II_SUITES = {"centralizer-normal", "centralizer-monoid", "centralizer-units"}


def by_suite(results):
    return {r.suite: r for r in results}


def test_all_suites_type_one():
    results = by_suite(run_suites(cyclic(F2, 3, 0, 0), "all", settings=settings))
    assert list(results) == list(SUITES)
    for suite_id, result in results.items():
        if suite_id in TYPE_II_SUITES or suite_id == "subdirect":
            assert result.status is SuiteStatus.skipped and result.reason == WRONG_TYPE
        else:
            assert result.status is SuiteStatus.passed, f"{suite_id}: {result.first_failure}"
            assert result.checks, f"{suite_id} ran no checks"


def test_all_suites_type_two():
    results = by_suite(run_suites(cyclic(F3, 2, 1), "all", settings=settings))
    for suite_id, result in results.items():
        if suite_id in TYPE_I_SUITES or suite_id == "subdirect":
            assert result.status is SuiteStatus.skipped
        else:
            assert result.status is SuiteStatus.passed, f"{suite_id}: {result.first_failure}"
    monoid = {c.id: c for c in results["centralizer-monoid"].checks}
    assert monoid["size-q-to-n-minus-1"].witness == "|D| = 3"


def test_all_suites_type_three():
    results = by_suite(run_suites(cyclic(F2, 3, 0, 1), "all", settings=settings))
    for suite_id in ("structure", "centers", "series", "scalar-map", "subdirect"):
        assert results[suite_id].status is SuiteStatus.passed, f"{suite_id}: {results[suite_id].first_failure}"
    for suite_id in TYPE_I_SUITES | TYPE_II_SUITES:
        assert results[suite_id].reason == WRONG_TYPE


def test_rationals_skip_enumeration():
    results = by_suite(run_suites(cyclic(QQ, 4, 0, 2, 1), "structure,centers,subdirect", settings=settings))
    assert results["structure"].status is SuiteStatus.passed
    assert results["centers"].reason == NEEDS_FINITE
    assert results["subdirect"].reason == NEEDS_FINITE


def test_table_algebra():
    abelian = LeibnizAlgebra(F2, 2, {})
    results = by_suite(run_suites(abelian, "all", settings=settings))
    for suite_id in ("structure", "centers", "series"):
        assert results[suite_id].status is SuiteStatus.passed
    assert results["scalar-map"].reason == WRONG_TYPE
    assert results["closed-form"].reason == WRONG_TYPE


def test_parse_suite_ids():
    assert parse_suite_ids("structure, series,structure") == ["structure", "series"]
    assert parse_suite_ids("centers,all") == list(SUITES)
    with pytest.raises(UnknownSuiteError):
        parse_suite_ids("structure,nope")
    with pytest.raises(UnknownSuiteError):
        parse_suite_ids(" , ")
    with pytest.raises(UnknownSuiteError):
        run_verify_suite(cyclic(F2, 2, 0), "nope")


def test_guard_propagates():
    with pytest.raises(GuardExceededError):
        run_suites(cyclic(F2, 3, 0, 0), "centers", settings=Settings(guard_bits=4))


def test_failures_carry_witnesses(monkeypatch):
    def broken(ctx, checks):
        checks.add("always-true", True)
        checks.first("no-even-numbers", [1, 3, 4, 5], lambda x: x % 2, lambda x: f"found {x}")

    monkeypatch.setitem(SUITES, "structure", Suite(broken, finite=False))
    result = run_verify_suite(Context(cyclic(QQ, 2, 0), settings=settings), "structure")
    assert result.failed
    assert result.first_failure.id == "no-even-numbers"
    assert result.first_failure.witness == "found 4"
