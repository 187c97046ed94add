"""Exact continued fractions of formal Laurent series over the rationals.

The engine expands truncations of a series  sum c_i / T^i  by polynomial
Euclid with exact rational arithmetic, certifies how many partial quotients
the truncation determines, and checks the certified expansion of the
two-letter word series against its closed-form description.
"""

from .closedform import (
    IDENTITY_NAMES,
    IdentityCheck,
    QuotientBlock,
    check_identity,
    factor_a,
    factor_b,
    initial_numerators,
    initial_quotients,
    predicted_denominator,
    predicted_leading_coeff,
    predicted_quotient,
    quotient_block,
    scale_r,
    scale_s,
)
from .expansion import (
    CertificationError,
    CFExpansion,
    Convergent,
    PrecisionCapExceeded,
    certify_by_doubling,
    continuant,
    convergent,
    delta,
    expand,
    expansion_rows,
    measure_estimate,
)
from .polynomial import NEG_INFINITY, Poly, Rat, T, as_rat, poly_gcd
from .series import (
    CoefficientSource,
    FunctionSource,
    RationalFunctionSource,
    SequenceSource,
    TruncatedSeries,
)
from .word import (
    WordSeriesSource,
    WordStream,
    combined_length,
    series_source,
    stage_length,
    word_prefix,
)

__version__ = "0.1.0"

__all__ = [
    "CFExpansion",
    "CertificationError",
    "CoefficientSource",
    "Convergent",
    "FunctionSource",
    "IDENTITY_NAMES",
    "IdentityCheck",
    "NEG_INFINITY",
    "Poly",
    "PrecisionCapExceeded",
    "QuotientBlock",
    "Rat",
    "RationalFunctionSource",
    "SequenceSource",
    "T",
    "TruncatedSeries",
    "WordSeriesSource",
    "WordStream",
    "as_rat",
    "certify_by_doubling",
    "check_identity",
    "combined_length",
    "continuant",
    "convergent",
    "delta",
    "expand",
    "expansion_rows",
    "factor_a",
    "factor_b",
    "initial_numerators",
    "initial_quotients",
    "measure_estimate",
    "poly_gcd",
    "predicted_denominator",
    "predicted_leading_coeff",
    "predicted_quotient",
    "quotient_block",
    "scale_r",
    "scale_s",
    "series_source",
    "stage_length",
    "word_prefix",
]
