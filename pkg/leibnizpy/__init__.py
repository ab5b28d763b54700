from .autos import (
    AutEnumeration,
    EndoCheck,
    GammaParams,
    LinearMap,
    UDDecomposition,
    automorphism_orders,
    c_scalar,
    centralizer_D_membership,
    d_f_polynomial,
    decompose_UD,
    endo_from_polynomial,
    endo_type1_from_gammas,
    enumerate_endomorphisms,
    in_subgroup_U,
    induced_quotient_map,
    is_automorphism,
    is_endomorphism,
    is_in_S,
    phi_to_unit,
    subdirect_check,
    theta_scalar,
    unit_to_unitriangular,
)
from .cyclic import (
    CyclicAlgebra,
    CyclicSpec,
    OperatorAction,
    RebaseResult,
    TypeTag,
    build_cyclic,
    canonical_c,
    classify,
    cyclic,
    from_lie_action,
    from_operator_action,
    rebase_type3,
)
from .exact import GF, QQ, FieldDescriptor, Matrix, Scalar, Subspace, kernel, mat_inverse, rref, scalar_arithmetic
from .exceptions import (
    GuardExceededError,
    InvalidInputError,
    LeibnizError,
    VerificationError,
)
from .leibniz import (
    Element,
    LeibnizAlgebra,
    bracket,
    centers,
    check_left_leibniz,
    is_nilpotent,
    leib_kernel,
    lower_central_series,
    product_subspace,
    upper_central_series,
)
from .models.enums import CyclicType, EndoKind, FieldKind, QuotientBlock, SeriesKind
from .models.files import MapFile, SpecFile
from .polyring import Poly, QuotElement, QuotientRing, enumerate_units, ext_gcd, poly_divmod, quot_inv, subgroup_I_elements
from .settings import Settings
from .verify import SUITES, run_suites, run_verify_suite
from .version import __version__

__all__ = [
    "AutEnumeration",
    "CyclicAlgebra",
    "CyclicSpec",
    "CyclicType",
    "Element",
    "EndoCheck",
    "EndoKind",
    "FieldDescriptor",
    "FieldKind",
    "GammaParams",
    "GF",
    "GuardExceededError",
    "InvalidInputError",
    "LeibnizAlgebra",
    "LeibnizError",
    "LinearMap",
    "MapFile",
    "Matrix",
    "OperatorAction",
    "Poly",
    "QQ",
    "QuotElement",
    "QuotientBlock",
    "QuotientRing",
    "RebaseResult",
    "Scalar",
    "SeriesKind",
    "Settings",
    "SpecFile",
    "Subspace",
    "SUITES",
    "TypeTag",
    "UDDecomposition",
    "VerificationError",
    "__version__",
    "automorphism_orders",
    "bracket",
    "build_cyclic",
    "c_scalar",
    "canonical_c",
    "centers",
    "centralizer_D_membership",
    "check_left_leibniz",
    "classify",
    "cyclic",
    "d_f_polynomial",
    "decompose_UD",
    "endo_from_polynomial",
    "endo_type1_from_gammas",
    "enumerate_endomorphisms",
    "enumerate_units",
    "ext_gcd",
    "from_lie_action",
    "from_operator_action",
    "in_subgroup_U",
    "induced_quotient_map",
    "is_automorphism",
    "is_endomorphism",
    "is_in_S",
    "is_nilpotent",
    "kernel",
    "leib_kernel",
    "lower_central_series",
    "mat_inverse",
    "phi_to_unit",
    "poly_divmod",
    "product_subspace",
    "quot_inv",
    "rebase_type3",
    "rref",
    "run_suites",
    "run_verify_suite",
    "scalar_arithmetic",
    "subdirect_check",
    "subgroup_I_elements",
    "theta_scalar",
    "unit_to_unitriangular",
    "upper_central_series",
]
