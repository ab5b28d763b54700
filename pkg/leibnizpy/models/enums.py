from enum import Enum


class FieldKind(Enum):
    rationals = "rationals"
    prime = "prime"


class ScalarOp(Enum):
    add = "add"
    mul = "mul"
    neg = "neg"
    inv = "inv"


class SubspaceOp(Enum):
    sum = "sum"
    intersect = "intersect"
    contains = "contains"
    equals = "equals"


class SeriesKind(Enum):
    lower = "lower"
    upper = "upper"


class CyclicType(Enum):
    I = "I"  # noqa: E741
    II = "II"
    III = "III"


class EndoKind(Enum):
    endomorphisms = "endomorphisms"
    automorphisms = "automorphisms"


class QuotientBlock(Enum):
    mod_V = "mod_V"
    mod_UU = "mod_UU"


class SuiteStatus(Enum):
    passed = "pass"
    failed = "fail"
    skipped = "skipped"
