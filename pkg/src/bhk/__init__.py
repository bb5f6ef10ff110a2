"""Exact-arithmetic toolkit for BHK mirror pairs of K3 surfaces: weighted
Delsarte matrices, diagonal symmetry groups, transposition duality, and
geometric Picard numbers computed by three mutually cross-checking routes."""

from .arith import (
    det_adjugate,
    euler_phi,
    gcd_lcm,
    inverse_rational,
    matrix4,
    minus_one_power_exists,
    multiplicative_order,
)
from .delsarte import Characteristic, DelsarteMatrix, build_delsarte, is_calabi_yau, transpose
from .duality import BhkPair, MirrorPair, dual_group, make_pair, mirror_pair, pairing
from .errors import (
    BhkError,
    CharDividesD,
    CharDividesDet,
    HNotInMd,
    InputError,
    InternalCheckError,
    MethodMismatch,
    MirrorNotAdequate,
    NegativeEntry,
    NonintegralAge,
    NonpositiveWeight,
    NotAdequate,
    NotInvertiblePotential,
    ParseError,
    RowWithoutZero,
    SemanticError,
    SingularMatrix,
    ZeroCoordinate,
)
from .picard import (
    AgedElement,
    OrbitDecomposition,
    PicardReport,
    ScanReport,
    age,
    age_one_census,
    aged_elements,
    orbit_decomposition,
    picard_by_counting,
    picard_by_orbits,
    picard_closed_form,
    picard_report,
    prime_scan,
    transcendental_set,
    transcendental_set_orbits,
)
from .smoothness import (
    AdequacyReport,
    Atom,
    AtomicDecomposition,
    Chain,
    Fermat,
    Loop,
    adequacy,
    atomic_decomposition,
    quasi_smooth,
    well_formed,
)
from .symmetry import (
    GroupElement,
    SymmetrySubgroup,
    aut_group,
    element_order,
    enumerate_intermediate,
    j_element,
    j_subgroup,
    sl_subgroup,
    subgroup_generated,
)

__version__ = "0.1.0"

__all__ = [
    "AdequacyReport",
    "AgedElement",
    "Atom",
    "AtomicDecomposition",
    "BhkError",
    "BhkPair",
    "Chain",
    "CharDividesD",
    "CharDividesDet",
    "Characteristic",
    "DelsarteMatrix",
    "Fermat",
    "GroupElement",
    "HNotInMd",
    "InputError",
    "InternalCheckError",
    "Loop",
    "MethodMismatch",
    "MirrorNotAdequate",
    "MirrorPair",
    "NegativeEntry",
    "NonintegralAge",
    "NonpositiveWeight",
    "NotAdequate",
    "NotInvertiblePotential",
    "OrbitDecomposition",
    "ParseError",
    "PicardReport",
    "RowWithoutZero",
    "ScanReport",
    "SemanticError",
    "SingularMatrix",
    "SymmetrySubgroup",
    "ZeroCoordinate",
    "adequacy",
    "age",
    "age_one_census",
    "aged_elements",
    "atomic_decomposition",
    "aut_group",
    "build_delsarte",
    "det_adjugate",
    "dual_group",
    "element_order",
    "enumerate_intermediate",
    "euler_phi",
    "gcd_lcm",
    "inverse_rational",
    "is_calabi_yau",
    "j_element",
    "j_subgroup",
    "make_pair",
    "matrix4",
    "minus_one_power_exists",
    "mirror_pair",
    "multiplicative_order",
    "orbit_decomposition",
    "pairing",
    "picard_by_counting",
    "picard_by_orbits",
    "picard_closed_form",
    "picard_report",
    "prime_scan",
    "quasi_smooth",
    "sl_subgroup",
    "subgroup_generated",
    "transcendental_set",
    "transcendental_set_orbits",
    "transpose",
    "well_formed",
    "__version__",
]
