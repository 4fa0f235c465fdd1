"""Exact combinatorial invariants of finite-gap submonoids of N^d.

The package computes gap sets, pseudo-Frobenius elements and Betti-type,
term-order Frobenius elements, symmetry classifications, Wilf and Buchsbaum
reports, gluings with the pseudo-Frobenius product formula, two parametric
families with unbounded Betti-type, and Arf/PI analysis, all in exact
integer arithmetic.
"""

from .arf import (
    PIMonoid,
    PIStatus,
    arf_closure,
    arf_derived,
    is_arf,
    is_arf_pi,
    is_pi,
    pi_decompose,
    prop79_check,
    prop710_check,
)
from .conjectures import BuchsbaumReport, WilfReport, buchsbaum_report, wilf_report
from .constructions import (
    AperyWindowReport,
    DeltaVerification,
    GluedPF,
    GluingSpec,
    SapsFamily,
    apery_sap_window,
    delta_set,
    family_sap,
    family_saps,
    glue,
    glued_pf,
    scale_numerical,
    verify_delta_pf,
)
from .errors import (
    BadParams,
    BudgetExceeded,
    DimensionMismatch,
    DimensionOne,
    EmptyGapSet,
    EmptyPF,
    HypothesisFailed,
    IdealBaseMismatch,
    InfiniteApery,
    InfiniteGaps,
    NotAGluing,
    NotClosed,
    NotFullCone,
    NotMinimal,
    NotNatural,
    NotPI,
    OrderNotPredecessorFinite,
    SemigroupError,
)
from .frobenius import (
    FrobeniusReport,
    RelativeIdeal,
    apery,
    betti_type,
    cardinality_identity,
    classify,
    cover_witness,
    frobenius_element,
    ideal_difference_member,
    omega_extra,
    pf_via_ideal,
    pseudo_frobenius,
)
from .gapsemigroup import (
    Budget,
    GapSemigroup,
    from_gaps,
    from_generators,
    genus,
    validate_complement_closed,
)
from .lattice import (
    GRLEX,
    LEX,
    IntegerLattice,
    Point,
    TermOrder,
    enumerate_box,
    enumerate_preceding,
    hermite_normal_form,
    lattice_from,
    lattice_intersect,
    lattice_member,
    order_cmp,
    partial_leq,
)
from .membership import (
    AffineSemigroup,
    SliceDecomposition,
    minimalize,
    multiplicity,
    slice_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "AffineSemigroup",
    "AperyWindowReport",
    "BadParams",
    "Budget",
    "BudgetExceeded",
    "BuchsbaumReport",
    "DeltaVerification",
    "DimensionMismatch",
    "DimensionOne",
    "EmptyGapSet",
    "EmptyPF",
    "FrobeniusReport",
    "GapSemigroup",
    "GluedPF",
    "GluingSpec",
    "GRLEX",
    "HypothesisFailed",
    "IdealBaseMismatch",
    "InfiniteApery",
    "InfiniteGaps",
    "IntegerLattice",
    "LEX",
    "NotAGluing",
    "NotClosed",
    "NotFullCone",
    "NotMinimal",
    "NotNatural",
    "NotPI",
    "OrderNotPredecessorFinite",
    "PIMonoid",
    "PIStatus",
    "Point",
    "RelativeIdeal",
    "SapsFamily",
    "SemigroupError",
    "SliceDecomposition",
    "TermOrder",
    "WilfReport",
    "apery",
    "apery_sap_window",
    "arf_closure",
    "arf_derived",
    "betti_type",
    "buchsbaum_report",
    "cardinality_identity",
    "classify",
    "cover_witness",
    "delta_set",
    "enumerate_box",
    "enumerate_preceding",
    "family_sap",
    "family_saps",
    "frobenius_element",
    "from_gaps",
    "from_generators",
    "genus",
    "glue",
    "glued_pf",
    "hermite_normal_form",
    "ideal_difference_member",
    "is_arf",
    "is_arf_pi",
    "is_pi",
    "lattice_from",
    "lattice_intersect",
    "lattice_member",
    "minimalize",
    "multiplicity",
    "omega_extra",
    "order_cmp",
    "partial_leq",
    "pf_via_ideal",
    "pi_decompose",
    "prop79_check",
    "prop710_check",
    "pseudo_frobenius",
    "scale_numerical",
    "slice_decomposition",
    "validate_complement_closed",
    "verify_delta_pf",
    "wilf_report",
]
