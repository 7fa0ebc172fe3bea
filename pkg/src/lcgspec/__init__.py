"""Exact spectral-test analysis and construction of maximum-period LCGs."""

from .builder import (
    BuildRequest,
    BuiltGenerator,
    MultiplierRecipe,
    ValidationReport,
    build,
    build_range,
    build_single_dimension,
    validate,
)
from .empirical import FrequencyReport, dump_sequence, format_fraction, frequency_test
from .errors import (
    BudgetExceeded,
    DimensionTooLarge,
    EmptyBox,
    ExpressionError,
    FactorizationError,
    InvalidParams,
    LambdaInvalid,
    LcgspecError,
    NoPotential,
    PeriodBroken,
    PeriodViolation,
    PotentialOne,
    TooSmall,
    Unsupported,
)
from .exprparse import parse_endpoint, parse_int_expr
from .lattice import (
    LatticeBasis,
    ShortestVectorResult,
    brute_force_shortest,
    dual_basis,
    lll_reduce,
    shortest_vector,
)
from .lcg import (
    LcgParams,
    MaxPeriodReport,
    PotentialProfile,
    SequenceDump,
    check_max_period,
    compute_potential,
    generate,
    normalize,
    step,
)
from .spectral import (
    Regime,
    SpectralResult,
    TheoremBounds,
    b_coefficient,
    classify_regime,
    knuth_bound,
    merit,
    spectral_test,
    theorem_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "BuildRequest",
    "BuiltGenerator",
    "BudgetExceeded",
    "DimensionTooLarge",
    "EmptyBox",
    "ExpressionError",
    "FactorizationError",
    "FrequencyReport",
    "InvalidParams",
    "LambdaInvalid",
    "LatticeBasis",
    "LcgParams",
    "LcgspecError",
    "MaxPeriodReport",
    "MultiplierRecipe",
    "NoPotential",
    "PeriodBroken",
    "PeriodViolation",
    "PotentialOne",
    "PotentialProfile",
    "Regime",
    "SequenceDump",
    "ShortestVectorResult",
    "SpectralResult",
    "TheoremBounds",
    "TooSmall",
    "Unsupported",
    "ValidationReport",
    "b_coefficient",
    "brute_force_shortest",
    "build",
    "build_range",
    "build_single_dimension",
    "check_max_period",
    "classify_regime",
    "compute_potential",
    "dual_basis",
    "dump_sequence",
    "format_fraction",
    "frequency_test",
    "generate",
    "knuth_bound",
    "lll_reduce",
    "merit",
    "normalize",
    "parse_endpoint",
    "parse_int_expr",
    "shortest_vector",
    "spectral_test",
    "step",
    "theorem_bounds",
    "validate",
]
