"""Exact invariants of links of isolated weighted-homogeneous singularities.

The pipeline, bottom to top: weight systems and monomial supports
(weights), the divisor ring of roots of unity (divisor), Milnor number and
monodromy characteristic polynomial (monodromy), graded Milnor-algebra
dimensions with Hodge numbers, signature and genus (milnor_algebra),
singular strata and orbifold data (orbifold), and the assembled report
with the 5-manifold classification (classify).  The cli module wraps it
all for the command line.
"""

from .classify import (
    BUILTIN_REGISTRY,
    CANDIDATE,
    KNOWN_SE,
    NOT_FANO,
    NOT_WELL_FORMED,
    OBSTRUCTED,
    CheckResult,
    InvariantReport,
    RegistryEntry,
    analyze,
    cross_checks,
    load_registry,
    registry_dump,
    registry_lookup,
    require_consistent,
    smale_name,
    smale_type,
)
from .divisor import Divisor, lambda_of
from .errors import (
    BoundExceededError,
    CancelledMonomialError,
    ConsistencyError,
    DegenerateDegreeError,
    DuplicateMonomialWarning,
    EmptySubsetError,
    InexactDivisionError,
    IntegralityViolationError,
    LengthMismatchError,
    NonIntegralCoefficientError,
    NonIntegralMilnorNumberError,
    NonPositiveIndexError,
    NonPositiveWeightError,
    NotNormalizedError,
    NotQuasiHomogeneousError,
    PolynomialSyntaxError,
    SinglinkError,
    UnsupportedDimensionError,
    WrongDimensionError,
)
from .milnor_algebra import (
    PoincareSeries,
    genus_branch_curve,
    graded_dim,
    hodge_numbers,
    middle_betti_hodge,
    poincare_series,
    signature,
)
from .monodromy import (
    ExpandedPoly,
    FactoredCharPoly,
    bp_oracle,
    characteristic_divisor,
    expand,
    middle_betti,
    milnor_number,
    to_factored,
)
from .orbifold import (
    CONTAINED,
    DISJOINT,
    MEETS,
    TORSION_FREE,
    TORSION_UNKNOWN,
    Fano,
    Stratum,
    fano,
    orbifold_order,
    pair_well_formed,
    singular_strata,
    torsion_status,
)
from .weights import (
    WeightedPolynomial,
    WeightSystem,
    count_monomials,
    divisibility_condition,
    is_well_formed_space,
    missing_variables,
    quasi_degree,
    restrict,
    validate_weights,
    weighted_degree,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_REGISTRY",
    "BoundExceededError",
    "CANDIDATE",
    "CancelledMonomialError",
    "CheckResult",
    "ConsistencyError",
    "CONTAINED",
    "count_monomials",
    "DegenerateDegreeError",
    "DISJOINT",
    "Divisor",
    "DuplicateMonomialWarning",
    "EmptySubsetError",
    "ExpandedPoly",
    "FactoredCharPoly",
    "Fano",
    "InexactDivisionError",
    "IntegralityViolationError",
    "InvariantReport",
    "KNOWN_SE",
    "LengthMismatchError",
    "MEETS",
    "NOT_FANO",
    "NOT_WELL_FORMED",
    "NonIntegralCoefficientError",
    "NonIntegralMilnorNumberError",
    "NonPositiveIndexError",
    "NonPositiveWeightError",
    "NotNormalizedError",
    "NotQuasiHomogeneousError",
    "OBSTRUCTED",
    "PoincareSeries",
    "PolynomialSyntaxError",
    "RegistryEntry",
    "SinglinkError",
    "Stratum",
    "TORSION_FREE",
    "TORSION_UNKNOWN",
    "UnsupportedDimensionError",
    "WeightedPolynomial",
    "WeightSystem",
    "WrongDimensionError",
    "analyze",
    "bp_oracle",
    "characteristic_divisor",
    "cross_checks",
    "divisibility_condition",
    "expand",
    "fano",
    "genus_branch_curve",
    "graded_dim",
    "hodge_numbers",
    "is_well_formed_space",
    "lambda_of",
    "load_registry",
    "middle_betti",
    "middle_betti_hodge",
    "milnor_number",
    "missing_variables",
    "orbifold_order",
    "pair_well_formed",
    "poincare_series",
    "quasi_degree",
    "registry_dump",
    "registry_lookup",
    "require_consistent",
    "restrict",
    "signature",
    "singular_strata",
    "smale_name",
    "smale_type",
    "to_factored",
    "torsion_status",
    "validate_weights",
    "weighted_degree",
]
