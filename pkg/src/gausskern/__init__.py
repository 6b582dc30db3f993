"""gausskern: short cosine-sum approximation of the Gaussian.

Approximates e^{-t^2/2 sigma} in L^2(R, e^{-t^2/2 rho}) by a cosine sum
whose frequencies are zeros of a scaled Hermite polynomial, with two
alternative routes (a hypergeometric matrix pencil and a derivative-based
Prony method) and closed-form plus quadrature error evaluation.
"""

from .approx import (
    CharPolyCoeffs,
    CosineSumApprox,
    GaussianTarget,
    approx_from_json,
    approx_to_json,
    approximate,
    char_poly_coeffs,
    frequencies,
    quadrature_coefficients,
    solve_coefficients,
    solve_coefficients_folded,
)
from .errors import (
    ErrorReport,
    MN_diagnostic,
    closed_form_error,
    lemma31_bound_check,
    oracle_error,
    thm31_bound,
    truncated_L2_error,
    weighted_error_exponential_sum,
)
from .hermite import (
    HermiteRule,
    hermite_eval,
    hermite_function,
    hermite_rule,
)
from .linalg import NotPositiveDefinite
from .pencil import (
    ProjectionFailure,
    build_A,
    build_A_double_sum,
    build_A_truncated,
    pencil_frequencies,
)
from .prony import (
    DerivativeTable,
    derivative_values,
    prony_approximate,
    prony_coefficients,
    prony_frequencies,
)

__version__ = "0.1.0"
