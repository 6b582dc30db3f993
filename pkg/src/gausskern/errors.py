"""Error functionals and the theoretical decay diagnostics.

The weighted L^2 error of a cosine-sum approximant has the closed quadratic
form F = m0 - 2 g.gamma + gamma.H.gamma in the coefficients (valid for any
gamma, not only the minimizer); an adaptive-quadrature oracle provides the
independent check.  The remaining functions turn the paper-side bounds
(exponential decay rate, truncation law, quadrature-error lemma, the
M_N < C N^{3/2} weight-sum law) into measurable numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .approx import CosineSumApprox, GaussianTarget
from .hermite import HermiteRule

__all__ = [
    "ErrorReport",
    "CSV_HEADER",
    "weighted_error_quadratic",
    "closed_form_error",
    "weighted_error_exponential_sum",
    "oracle_error",
    "truncated_L2_error",
    "thm31_bound",
    "MN_diagnostic",
    "lemma31_bound_check",
    "report_row",
]

CSV_HEADER = (
    "sigma,rho,N,method,weighted_error,oracle_error,bound,truncT,"
    "trunc_error,MN"
)

# relative size below which a negative F is treated as cancellation noise
NOISE_FLOOR = 1e-14


@dataclass
class ErrorReport:
    sigma: float
    rho: float
    N: int
    method: str
    weighted_error: float
    oracle_error: float | None = None
    bound: float | None = None
    truncT: float | None = None
    trunc_error: float | None = None
    MN: float | None = None
    noise_flagged: bool = False


def _g_vector(target: GaussianTarget, freqs: np.ndarray) -> np.ndarray:
    sigma, rho = target.sigma, target.rho
    pref = math.sqrt(2.0 * math.pi * sigma * rho / (sigma + rho))
    return pref * np.exp(-sigma * rho * freqs ** 2 / (2.0 * (sigma + rho)))


def _gram(target: GaussianTarget, freqs: np.ndarray) -> np.ndarray:
    diff = freqs[:, None] - freqs[None, :]
    return math.sqrt(2.0 * math.pi * target.rho) * np.exp(
        -target.rho * diff ** 2 / 2.0
    )


def weighted_error_quadratic(target: GaussianTarget, freqs: np.ndarray,
                             coeffs: np.ndarray) -> tuple[float, bool]:
    """F(gamma) = m0 - 2 g.gamma + gamma.H.gamma for real symmetric input.

    Returns (F, noise_flag); a tiny negative F from cancellation is clamped
    to 0 and flagged.
    """
    m0 = target.weighted_mass()
    g = _g_vector(target, freqs)
    H = _gram(target, freqs)
    terms = np.array([m0, -2.0 * g @ coeffs, coeffs @ H @ coeffs])
    F = math.fsum(terms)
    if F < 0:
        if abs(F) < NOISE_FLOOR * m0:
            return 0.0, True
        raise ArithmeticError(f"negative error functional F={F:.3e}")
    return F, F < NOISE_FLOOR * m0


def closed_form_error(target: GaussianTarget,
                      approx: CosineSumApprox) -> float:
    """sqrt(F) of the weighted L^2 error, by the closed quadratic form."""
    if approx.target != target:
        raise ValueError("approximation was built for a different target")
    F, _ = weighted_error_quadratic(target, approx.freqs, approx.coeffs)
    return math.sqrt(F)


def weighted_error_exponential_sum(target: GaussianTarget,
                                   lambdas: np.ndarray,
                                   gammas: np.ndarray) -> float:
    """sqrt(F) for a general complex exponential sum sum gamma_j e^{lambda_j t}.

    Same Gaussian integrals as the real case, without assuming the
    imaginary-axis structure; used to score the Prony-from-derivatives
    output, whose frequencies are complex in floating point.
    """
    sigma, rho = target.sigma, target.rho
    lam = np.asarray(lambdas, dtype=complex)
    gam = np.asarray(gammas, dtype=complex)
    g = math.sqrt(2.0 * math.pi * sigma * rho / (sigma + rho)) * np.exp(
        sigma * rho * lam ** 2 / (2.0 * (sigma + rho))
    )
    cross = lam[:, None] + np.conj(lam)[None, :]
    H = math.sqrt(2.0 * math.pi * rho) * np.exp(cross ** 2 * rho / 2.0)
    F = (
        target.weighted_mass()
        - 2.0 * float(np.real(np.conj(gam) @ g))
        + float(np.real(np.conj(gam) @ H @ gam))
    )
    return math.sqrt(max(F, 0.0))


def oracle_error(target: GaussianTarget, approx, domain=None,
                 weighted: bool = True) -> float:
    """Independent quadrature oracle for the (weighted) L^2 error.

    approx is any callable t -> value.  The default domain [-T*, T*] with
    T* = sqrt(160 rho) (or sqrt(160 sigma) if larger, unweighted) leaves a
    tail below e^{-80} times the relevant mass.
    """
    if domain is None:
        T = math.sqrt(2.0 * target.rho * 80.0)
        if not weighted:
            T = max(T, math.sqrt(2.0 * target.sigma * 80.0))
        domain = (-T, T)

    def integrand(t):
        d = abs(math.exp(-t * t / (2.0 * target.sigma)) - complex(approx(t)))
        w = math.exp(-t * t / (2.0 * target.rho)) if weighted else 1.0
        return d * d * w

    val, est = quad(integrand, domain[0], domain[1],
                    epsabs=1e-14, epsrel=1e-13, limit=800)
    return math.sqrt(max(val, 0.0))


def truncated_L2_error(target: GaussianTarget,
                       approx: CosineSumApprox) -> tuple[float, float]:
    """Unweighted L^2(R) error of the cosine sum truncated to [-T, T].

    T = sqrt(2 sigma N ln 2); the tail int_{|t|>T} e^{-t^2/sigma} dt is
    exact via erfc, the interior by adaptive quadrature.  Intended for
    approximants built with rho = sigma/2.
    """
    sigma = target.sigma
    T = math.sqrt(2.0 * sigma * approx.N * math.log(2.0))
    tail = math.sqrt(math.pi * sigma) * math.erfc(T / math.sqrt(sigma))

    def integrand(t):
        d = math.exp(-t * t / (2.0 * sigma)) - float(approx(t))
        return d * d

    inner, _ = quad(integrand, -T, T, epsabs=1e-14, epsrel=1e-13, limit=800)
    return T, math.sqrt(max(tail + inner, 0.0))


def thm31_bound(r: float, N: int) -> float:
    """c-free decay rate (r/sqrt(2(2r+1)))^N * N^{3/4}; decays iff r < 2+sqrt(6)."""
    if r <= 0:
        raise ValueError("r must be positive")
    return (r / math.sqrt(2.0 * (2.0 * r + 1.0))) ** N * N ** 0.75


def MN_diagnostic(rule: HermiteRule) -> tuple[float, float]:
    """M_N = sum w_k e^{t_k^2} and its ratio to N^{3/2}."""
    MN = float(np.sum(rule.scaled_weights))
    return MN, MN / rule.degree ** 1.5


def lemma31_bound_check(target: GaussianTarget, rule: HermiteRule,
                        k: int) -> tuple[float, float]:
    """Quadrature error of f_k(t) = e^{-2 s1 t^2 + 2 s0 t_k t} vs its bound.

    lhs = |sum_j w_j f_k(t_j) - sqrt(pi(2r+1))/(r+1) e^{2 s1 t_k^2}|,
    rhs = sqrt(pi) s1^N e^{s0^2 t_k^2 / (2 s1)}; the inequality lhs < rhs
    is the paper-side lemma feeding the main decay bound.  Exponentials of
    t^2-scale arguments are combined with the scaled weights in the
    exponent before exponentiating.
    """
    r = target.r
    s0 = r * (1.0 + r) / (2.0 * r + 1.0)
    s1 = r * r / (2.0 * (2.0 * r + 1.0))
    tk = rule.zeros[k]
    t = rule.zeros
    # w_j f_k(t_j) = scaled_w_j * exp(-(1+2 s1) t_j^2 + 2 s0 t_j t_k)
    expo = -(1.0 + 2.0 * s1) * t ** 2 + 2.0 * s0 * t * tk
    quad_sum = math.fsum(rule.scaled_weights * np.exp(expo))
    exact = math.sqrt(math.pi * (2.0 * r + 1.0)) / (r + 1.0) * math.exp(
        2.0 * s1 * tk * tk
    )
    lhs = abs(quad_sum - exact)
    rhs = math.sqrt(math.pi) * s1 ** rule.degree * math.exp(
        s0 * s0 * tk * tk / (2.0 * s1)
    )
    return lhs, rhs


def report_row(report: ErrorReport) -> str:
    """One CSV row in the order of CSV_HEADER, 17 significant digits."""
    def fmt(x) -> str:
        return "" if x is None else format(x, ".17g")

    return ",".join([
        fmt(report.sigma), fmt(report.rho), str(report.N), report.method,
        fmt(report.weighted_error), fmt(report.oracle_error),
        fmt(report.bound), fmt(report.truncT), fmt(report.trunc_error),
        fmt(report.MN),
    ])
