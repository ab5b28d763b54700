"""
Command line front end.

Every command reads an algebra from a JSON spec file (or a field and coefficient list) and prints
either aligned text or, with ``--json``, the pydantic report. Exit codes: 0 success, 1 a verification
check failed, 2 invalid input, 3 an enumeration guard tripped.
"""

import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, Union

from pydantic import BaseModel, ValidationError

from .autos import LinearMap, automorphism_orders, enumerate_endomorphisms, is_automorphism, is_endomorphism
from .cyclic import (
    CyclicAlgebra,
    annihilator_polynomial,
    canonical_c,
    from_operator_action,
    rebase_type3,
)
from .exact import FieldDescriptor, Subspace
from .exceptions import LeibnizError, WrongTypeError
from .leibniz import LeibnizAlgebra, centers, is_lie, is_nilpotent, leib_kernel, lower_central_series, upper_central_series
from .models.enums import CyclicType, EndoKind, SeriesKind
from .models.files import MapFile, SpecFile
from .models.reports import (
    CentersReport,
    ClassificationReport,
    DescriptionReport,
    EndoCheckReport,
    EnumerationReport,
    RebaseReport,
    SeriesReport,
    SubspaceModel,
    UnitsReport,
)
from .polyring import Poly, QuotientRing, enumerate_units, subgroup_I_elements
from .settings import Settings, default_settings
from .verify import run_suites

log = logging.getLogger("leibniz.cli")

AlgebraLike = Union[CyclicAlgebra, LeibnizAlgebra]


class Output:
    """Collects stdout lines so a failing command prints nothing partial."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: List[str] = []

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def model(self, report: BaseModel) -> None:
        self.lines.append(report.model_dump_json(indent=2))

    def table(self, rows: Sequence[Sequence[str]]) -> None:
        if not rows:
            return
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        for row in rows:
            self.lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())

    def flush(self) -> None:
        if self.lines:
            sys.stdout.write("\n".join(self.lines) + "\n")


def _inner(algebra: AlgebraLike) -> LeibnizAlgebra:
    return algebra.algebra if isinstance(algebra, CyclicAlgebra) else algebra


def _require_cyclic(algebra: AlgebraLike, command: str) -> CyclicAlgebra:
    if not isinstance(algebra, CyclicAlgebra):
        raise WrongTypeError(f"{command} needs a cyclic algebra spec")
    return algebra


def _subspace_model(subspace: Subspace) -> SubspaceModel:
    field = subspace.field
    return SubspaceModel(dim=subspace.dim, basis=[[field.format_value(x) for x in v] for v in subspace.vectors()])


def _span(L: LeibnizAlgebra, subspace: Subspace) -> str:
    if subspace.dim == 0:
        return "0"
    return "span{" + ", ".join(L.format_vector(v) for v in subspace.vectors()) + "}"


def _describe_algebra(algebra: AlgebraLike) -> str:
    if isinstance(algebra, CyclicAlgebra):
        return f"{algebra.field} n={algebra.n} alpha=({', '.join(algebra.spec.alpha_strings())})"
    return f"{algebra.field} table dim={algebra.dim}"


def cmd_classify(args, out: Output, settings: Settings) -> int:
    C = _require_cyclic(SpecFile.load(args.spec).build(), "classify")
    nilpotent, klass = is_nilpotent(C.algebra)
    report = ClassificationReport(
        field=str(C.field),
        n=C.n,
        alpha=C.spec.alpha_strings(),
        type=C.variant,
        t=C.tag.t,
        nilpotent=nilpotent,
        nilpotency_class=klass,
    )
    if C.variant is CyclicType.II:
        c, companion = canonical_c(C)
        report.annihilator_polynomial = annihilator_polynomial(C).format()
        report.c = str(c)
        report.companion = companion.text_rows()
    if out.as_json:
        out.model(report)
        return 0
    out.line(str(C.tag))
    rows = [["field", report.field], ["n", str(report.n)], ["alpha", "(" + ", ".join(report.alpha) + ")"]]
    if C.variant is CyclicType.II:
        rows += [["a(X)", report.annihilator_polynomial], ["c", report.c]]
        rows += [["companion", " ".join("[" + " ".join(r) + "]" for r in report.companion)]]
    rows.append(["nilpotent", f"yes, class {klass}" if nilpotent else "no"])
    out.table(rows)
    return 0


def cmd_bracket_table(args, out: Output, settings: Settings) -> int:
    L = _inner(SpecFile.load(args.spec).build())
    if out.as_json:
        out.line(SpecFile.from_algebra(L).dumps())
        return 0
    rows = [
        [f"[{L.names[i]}, {L.names[j]}]", "=", L.format_vector(v)]
        for (i, j), v in sorted(L.tensor.items())
    ]
    out.table(rows)
    if not rows:
        out.line("all brackets vanish")
    return 0


def cmd_centers(args, out: Output, settings: Settings) -> int:
    L = _inner(SpecFile.load(args.spec).build())
    found = centers(L)
    if out.as_json:
        out.model(CentersReport(**{k: _subspace_model(getattr(found, k)) for k in ("left", "right", "two_sided")}))
        return 0
    out.table(
        [
            [label, f"dim {sub.dim}", _span(L, sub)]
            for label, sub in (("left center", found.left), ("right center", found.right), ("center", found.two_sided))
        ]
    )
    return 0


def cmd_series(args, out: Output, settings: Settings) -> int:
    L = _inner(SpecFile.load(args.spec).build())
    kind = SeriesKind.upper if args.upper else SeriesKind.lower
    series = upper_central_series(L) if kind is SeriesKind.upper else lower_central_series(L)
    report = SeriesReport(
        kind=kind, terms=[_subspace_model(t) for t in series.distinct], stabilized=series.stabilized
    )
    if kind is SeriesKind.lower:
        report.nilpotent, report.nilpotency_class = is_nilpotent(L)
    if out.as_json:
        out.model(report)
        return 0
    label = "zeta" if kind is SeriesKind.upper else "gamma"
    start = 0 if kind is SeriesKind.upper else 1
    out.table([[f"{label}_{k + start}", f"dim {t.dim}", _span(L, t)] for k, t in enumerate(series.distinct)])
    if kind is SeriesKind.lower:
        out.line(f"nilpotent: yes, class {report.nilpotency_class}" if report.nilpotent else "nilpotent: no")
    return 0


def cmd_leib(args, out: Output, settings: Settings) -> int:
    L = _inner(SpecFile.load(args.spec).build())
    kernel = leib_kernel(L)
    if out.as_json:
        out.line(json.dumps({"leib": _subspace_model(kernel).model_dump(), "lie": is_lie(L)}, indent=2))
        return 0
    out.table([["Leib(L)", f"dim {kernel.dim}", _span(L, kernel)], ["Lie algebra", "yes" if is_lie(L) else "no", ""]])
    return 0


def cmd_endo_check(args, out: Output, settings: Settings) -> int:
    algebra = SpecFile.load(args.spec).build()
    L = _inner(algebra)
    f = LinearMap(algebra, MapFile.load(args.map).to_matrix(L.field))
    check = is_endomorphism(f)
    report = EndoCheckReport(
        endomorphism=check.holds,
        automorphism=check.holds and is_automorphism(f),
        violating_pair=[i + 1 for i in check.pair] if check.pair else None,
    )
    if out.as_json:
        out.model(report)
        return 0
    out.line(f"endomorphism: {'yes' if report.endomorphism else 'no'}")
    out.line(f"automorphism: {'yes' if report.automorphism else 'no'}")
    if check.pair:
        i, j = check.pair
        out.line(f"fails on [{L.names[i]}, {L.names[j]}]")
    return 0


def cmd_aut_enumerate(args, out: Output, settings: Settings) -> int:
    algebra = SpecFile.load(args.spec).build()
    kind = EndoKind.endomorphisms if args.endos else EndoKind.automorphisms
    found = enumerate_endomorphisms(algebra, kind, args.force_guard, settings)
    report = EnumerationReport(
        algebra=_describe_algebra(algebra),
        kind=kind,
        candidates=found.candidates,
        count=len(found),
        order_histogram=automorphism_orders(found),
        maps=[f.matrix.text_rows() for f in found],
    )
    if out.as_json:
        out.model(report)
        return 0
    out.line(f"|{'End' if args.endos else 'Aut'}| = {report.count}")
    out.line(f"candidates tested: {report.candidates}")
    if report.order_histogram:
        out.table([["order", "count"]] + [[str(k), str(v)] for k, v in report.order_histogram.items()])
    return 0


def _describe_type1(C: CyclicAlgebra) -> DescriptionReport:
    n = C.n
    lines = [
        f"End(L) = S + Aut(L), S = {{f : f o f = 0}} = {{f : f(L) <= [L, L]}} an ideal with zero multiplication",
        f"Aut(L) = UC({n}) x| DmC({n}), f <-> M(gamma_2/gamma_1, ..., gamma_n/gamma_1) D(gamma_1)",
        f"UC({n}) = ker(theta) is isomorphic to I(F[X]/X^{n}) via M(u) -> 1 + u_2 z + ... + u_n z^{n - 1}",
        "DmC(n) = {diag(g, g^2, ..., g^n)} is isomorphic to the multiplicative group of F",
    ]
    counts = {}
    if C.field.is_finite:
        q = C.field.order
        counts = {"End": q**n, "S": q ** (n - 1), "Aut": (q - 1) * q ** (n - 1), "UC": q ** (n - 1), "DmC": q - 1}
    return DescriptionReport(algebra=_describe_algebra(C), type=C.variant, lines=lines, counts=counts)


def _describe_type2(C: CyclicAlgebra, force: bool, settings: Settings) -> DescriptionReport:
    a = annihilator_polynomial(C)
    c = canonical_c(C).c
    lines = [
        f"c = {c} spans the right center, L = [L, L] + Fc",
        f"a(X) = {a.format()} annihilates [L, L] under g(X) a = g(l_c)(a)",
        "D = {f in End(L) : f(c) = c} is isomorphic to the monoid F[X]/a(X)F[X] via f -> d_f(X)",
        "C = D n Aut(L) is normal in Aut(L) and isomorphic to U(F[X]/a(X)F[X])",
        "Aut(L)/C embeds into the multiplicative group of F via f(c) = sigma c",
    ]
    counts = {}
    if C.field.is_finite:
        ring = QuotientRing(a)
        counts = {"D": C.field.order ** (C.n - 1), "C": len(enumerate_units(ring, force, settings))}
    return DescriptionReport(algebra=_describe_algebra(C), type=C.variant, lines=lines, counts=counts)


def _describe_type3(C: CyclicAlgebra) -> DescriptionReport:
    result = rebase_type3(C)
    t, n = result.t, C.n
    alpha = ", ".join(result.spec_mod_UU.alpha_strings())
    lines = [
        f"t = {t}, V = span{{d{t}, ..., d{n}}}, [U, U] = span{{d2, ..., d{t - 1}}}",
        f"L/V is the type I cyclic algebra of dimension {t - 1}",
        f"L/[U, U] is the type II cyclic algebra of dimension {n - t + 2} with alpha = ({alpha})",
        "Aut(L) is a subdirect product of G1 <= Aut(L/V) and G2 <= Aut(L/[U, U])",
    ]
    return DescriptionReport(algebra=_describe_algebra(C), type=C.variant, lines=lines)


def cmd_aut_describe(args, out: Output, settings: Settings) -> int:
    C = _require_cyclic(SpecFile.load(args.spec).build(), "aut-describe")
    if C.variant is CyclicType.I:
        report = _describe_type1(C)
    elif C.variant is CyclicType.II:
        report = _describe_type2(C, args.force_guard, settings)
    else:
        report = _describe_type3(C)
    if out.as_json:
        out.model(report)
        return 0
    out.line(f"{report.algebra}: {C.tag}")
    for text in report.lines:
        out.line(f"  {text}")
    if report.counts:
        out.table([[f"|{k}|", str(v)] for k, v in report.counts.items()])
    return 0


def cmd_units(args, out: Output, settings: Settings) -> int:
    field = FieldDescriptor.parse(args.field)
    ring = QuotientRing(Poly.parse(field, args.modulus))
    units = enumerate_units(ring, args.force_guard, settings)
    subgroup = None
    if ring.truncation_degree is not None:
        subgroup = [str(x) for x in subgroup_I_elements(ring, args.force_guard, settings)]
    report = UnitsReport(
        ring=str(ring),
        modulus=ring.original_modulus.to_strings(),
        count=len(units),
        units=[str(x) for x in units],
        subgroup_I=subgroup,
    )
    if out.as_json:
        out.model(report)
        return 0
    out.line(f"U({report.ring}) has {report.count} elements")
    for text in report.units:
        out.line(f"  {text}")
    if subgroup is not None:
        out.line(f"I has {len(subgroup)} elements")
    return 0


def cmd_rebase(args, out: Output, settings: Settings) -> int:
    C = _require_cyclic(SpecFile.load(args.spec).build(), "rebase")
    result = rebase_type3(C)
    field = C.field
    report = RebaseReport(
        t=result.t,
        beta=[field.format_value(b) for b in result.beta],
        transition=result.T.text_rows(),
        U=_subspace_model(result.U_sub),
        UU=_subspace_model(result.UU_sub),
        V=_subspace_model(result.V_sub),
        mod_V_alpha=result.spec_mod_V.alpha_strings(),
        mod_UU_alpha=result.spec_mod_UU.alpha_strings(),
    )
    if out.as_json:
        out.model(report)
        return 0
    L = C.algebra
    out.line(f"t = {report.t}, beta = ({', '.join(report.beta)})")
    out.table([[f"d{i + 1}", "=", L.format_vector(row)] for i, row in enumerate(result.T.grid)])
    out.table(
        [
            ["U", f"dim {result.U_sub.dim}", _span(L, result.U_sub)],
            ["[U, U]", f"dim {result.UU_sub.dim}", _span(L, result.UU_sub)],
            ["V", f"dim {result.V_sub.dim}", _span(L, result.V_sub)],
        ]
    )
    out.line(f"L/V ~ cyclic type I, n = {result.spec_mod_V.n}")
    out.line(f"L/[U, U] ~ cyclic type II, n = {result.spec_mod_UU.n}, alpha = ({', '.join(report.mod_UU_alpha)})")
    return 0


def cmd_from_operator(args, out: Output, settings: Settings) -> int:
    field = FieldDescriptor.parse(args.field)
    matrix = MapFile.load(args.matrix).to_matrix(field)
    algebra = from_operator_action(matrix.rows, matrix)
    out.line(SpecFile.from_algebra(algebra).dumps())
    return 0


def cmd_verify(args, out: Output, settings: Settings) -> int:
    algebra = SpecFile.load(args.spec).build()
    results = run_suites(algebra, args.suite, args.force_guard, settings)
    failed = [r for r in results if r.failed]
    if out.as_json:
        out.line(json.dumps([r.model_dump(mode="json") for r in results], indent=2))
    else:
        for result in results:
            out.line(f"{result.suite}: {result.reason or result.status.value}")
            out.table([["", c.status.value, c.id, c.witness] for c in result.checks])
    if failed:
        check = failed[0].first_failure
        sys.stderr.write(f"verification failed: {failed[0].suite}/{check.id}: {check.witness}\n")
        return 1
    return 0


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print machine readable output")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")

    parser = argparse.ArgumentParser(prog="leibniz", description="Cyclic Leibniz algebras over Q and GF(p)")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable, help_text: str, spec: bool = True, guard: bool = False):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        if spec:
            sub.add_argument("-s", "--spec", required=True, help="Algebra spec file (JSON)")
        if guard:
            sub.add_argument("--force-guard", action="store_true", help="Raise the enumeration guard")
        sub.set_defaults(handler=handler)
        return sub

    command("classify", cmd_classify, "Type of a cyclic algebra")
    command("bracket-table", cmd_bracket_table, "Nonzero brackets of the basis")
    command("centers", cmd_centers, "Left, right and two-sided centers")
    series = command("series", cmd_series, "Lower or upper central series")
    which = series.add_mutually_exclusive_group()
    which.add_argument("--lower", action="store_true", help="Lower central series (default)")
    which.add_argument("--upper", action="store_true", help="Upper central series")
    command("leib", cmd_leib, "Leibniz kernel")
    endo = command("endo-check", cmd_endo_check, "Test a map file against the brackets")
    endo.add_argument("-m", "--map", required=True, help="Map file (JSON), columns are basis images")
    enum = command("aut-enumerate", cmd_aut_enumerate, "Enumerate automorphisms over a prime field", guard=True)
    enum.add_argument("--endos", action="store_true", help="List all endomorphisms instead")
    command("aut-describe", cmd_aut_describe, "Structure of the automorphism group", guard=True)
    units = command("units", cmd_units, "Units of F[X]/(modulus)", spec=False, guard=True)
    units.add_argument("-f", "--field", required=True, help="Q or GF:p")
    units.add_argument("-m", "--modulus", required=True, help="Ascending coefficients, e.g. 1,1,-1")
    command("rebase", cmd_rebase, "d-basis of a type III algebra")
    op = command("from-operator", cmd_from_operator, "Algebra Fc + A from one operator", spec=False)
    op.add_argument("-f", "--field", required=True, help="Q or GF:p")
    op.add_argument("--matrix", required=True, help="Map file (JSON) holding the operator")
    verify = command("verify", cmd_verify, "Run verification suites", guard=True)
    verify.add_argument("--suite", default="all", help="Comma separated suite ids, or all")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    out = Output(args.json)
    try:
        settings = default_settings()
        level = logging.DEBUG if args.verbose else getattr(logging, settings.log_level)
        logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")
        log.debug("Running %s", args.command)
        code = args.handler(args, out, settings)
    except LeibnizError as e:
        sys.stderr.write(f"error: {e.message}\n")
        return e.exit_code
    except ValidationError as e:
        sys.stderr.write(f"error: invalid file: {_validation_summary(e)}\n")
        return 2
    out.flush()
    return code


def _validation_summary(error: ValidationError) -> str:
    first: Dict = error.errors()[0]
    where = ".".join(str(part) for part in first.get("loc", ()))
    return f"{where}: {first.get('msg')}" if where else str(first.get("msg"))


if __name__ == "__main__":
    sys.exit(main())
