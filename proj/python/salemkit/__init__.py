"""Salem numbers alpha for which alpha**n - 1 is a unit.

Polynomials are lists of integer coefficients, constant term first.
"""

from ._core import (
    GenerationAborted,
    InternalInvariantError,
    InvalidGeneratorSpec,
    ParseError,
    UnsupportedParameters,
    __version__,
    alpha,
    chebyshev,
    classify,
    compress_trace,
    cyclo_trace,
    evertse_bound,
    expand_trace,
    family,
    generate,
    is_irreducible,
    norm_pow_minus,
    norm_pow_plus,
    parse_poly_file,
    recurrence_pairs,
    reproduce,
    theorem2_degrees,
    threshold,
    unit_spectrum,
    verify,
)
