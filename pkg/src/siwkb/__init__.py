"""siwkb: shape-invariant potentials and exact semiclassical quantization.

Ten conventional shape-invariant families with their exact spectra, the
three quantization actions (plain WKB, generalized-Langer-corrected WKB,
SWKB), closed-form reference integrals, an independent Numerov eigensolver
and the half-shift identity connecting the corrected WKB and SWKB forms.
"""

__version__ = "0.1.0"

from .closedform import ClosedFormKind, evaluate, numeric_reference
from .errors import (
    AmbiguousRegionError,
    BracketError,
    DomainError,
    NoBoundRegionError,
    NoSolutionError,
    OracleError,
    OutOfSpectrumError,
    QuadratureError,
    ShiftedParameterError,
    SiwkbError,
    TruncationError,
    UnsupportedFamilyError,
    ValidationError,
)
from .families import (
    FAMILIES,
    FAMILY_NAMES,
    DomainSpec,
    Family,
    InternalParams,
    Params,
    SpectrumLevel,
    ValidityReport,
    bound_state_count,
    exact_energy,
    f1_and_derivative,
    get_family,
    langer_term,
    potential_minus,
    potential_plus,
    spectrum,
    superpotential,
    superpotential_prime,
    validate,
)
from .numerov import SolverConfig, eigenvalue, node_count, singular_loglog_slope
from .quantize import (
    ALL_SCHEMES,
    QuantizationResult,
    Scheme,
    SpectrumReport,
    TurningPoints,
    action_integral,
    asymptotic_slope,
    predicted_asymptotic_slope,
    solve_energy,
    spectrum_report,
    turning_points_analytic,
    turning_points_numeric,
)
from .relation import (
    RelationSample,
    half_shift_action_check,
    identity_samples,
    integrand_identity_residual,
    shifted_params,
)

__all__ = [
    "__version__",
    "FAMILIES",
    "FAMILY_NAMES",
    "Params",
    "DomainSpec",
    "Family",
    "InternalParams",
    "SpectrumLevel",
    "ValidityReport",
    "Scheme",
    "ALL_SCHEMES",
    "TurningPoints",
    "QuantizationResult",
    "SpectrumReport",
    "SolverConfig",
    "ClosedFormKind",
    "superpotential",
    "superpotential_prime",
    "potential_minus",
    "potential_plus",
    "f1_and_derivative",
    "langer_term",
    "exact_energy",
    "bound_state_count",
    "validate",
    "spectrum",
    "get_family",
    "turning_points_numeric",
    "turning_points_analytic",
    "action_integral",
    "solve_energy",
    "asymptotic_slope",
    "predicted_asymptotic_slope",
    "spectrum_report",
    "evaluate",
    "numeric_reference",
    "eigenvalue",
    "node_count",
    "singular_loglog_slope",
    "integrand_identity_residual",
    "identity_samples",
    "RelationSample",
    "half_shift_action_check",
    "shifted_params",
    "SiwkbError",
    "DomainError",
    "ValidationError",
    "OutOfSpectrumError",
    "NoBoundRegionError",
    "AmbiguousRegionError",
    "QuadratureError",
    "NoSolutionError",
    "UnsupportedFamilyError",
    "ShiftedParameterError",
    "OracleError",
    "BracketError",
    "TruncationError",
]
