from typing import Dict, List, Optional

from pydantic import Field

from . import _Base
from .enums import CyclicType, EndoKind, SeriesKind, SuiteStatus


class SubspaceModel(_Base):
    dim: int
    basis: List[List[str]] = Field(description="Canonical basis rows, scalar literals")


class CheckResult(_Base):
    id: str
    status: SuiteStatus
    witness: str = ""


class VerifySuiteResult(_Base):
    suite: str
    status: SuiteStatus
    checks: List[CheckResult] = []
    reason: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.status is SuiteStatus.failed

    @property
    def first_failure(self) -> Optional[CheckResult]:
        return next((c for c in self.checks if c.status is SuiteStatus.failed), None)


class ClassificationReport(_Base):
    field: str
    n: int
    alpha: List[str]
    type: CyclicType
    t: Optional[int] = None
    annihilator_polynomial: Optional[str] = None
    c: Optional[str] = None
    companion: Optional[List[List[str]]] = None
    nilpotent: bool
    nilpotency_class: Optional[int] = None


class CentersReport(_Base):
    left: SubspaceModel
    right: SubspaceModel
    two_sided: SubspaceModel


class SeriesReport(_Base):
    kind: SeriesKind
    terms: List[SubspaceModel]
    stabilized: bool
    nilpotent: Optional[bool] = None
    nilpotency_class: Optional[int] = None


class EndoCheckReport(_Base):
    endomorphism: bool
    automorphism: bool
    violating_pair: Optional[List[int]] = Field(None, description="1-based basis pair")


class EnumerationReport(_Base):
    algebra: str
    kind: EndoKind
    candidates: int
    count: int
    order_histogram: Dict[int, int] = {}
    maps: List[List[List[str]]] = []


class DescriptionReport(_Base):
    algebra: str
    type: CyclicType
    lines: List[str]
    counts: Dict[str, int] = {}


class UnitsReport(_Base):
    ring: str
    modulus: List[str]
    count: int
    units: List[str]
    subgroup_I: Optional[List[str]] = None


class RebaseReport(_Base):
    t: int
    beta: List[str]
    transition: List[List[str]]
    U: SubspaceModel
    UU: SubspaceModel
    V: SubspaceModel
    mod_V_alpha: List[str]
    mod_UU_alpha: List[str]


class SubdirectReport(_Base):
    algebra: str
    aut_order: int
    injective: bool
    homomorphic_mod_V: bool
    homomorphic_mod_UU: bool
    images_are_automorphisms: bool
    kernel_trivial: bool
    image_mod_V: int
    image_mod_UU: int
    aut_mod_V: int
    aut_mod_UU: int

    @property
    def holds(self) -> bool:
        return all(
            (
                self.injective,
                self.homomorphic_mod_V,
                self.homomorphic_mod_UU,
                self.images_are_automorphisms,
                self.kernel_trivial,
            )
        )
