"""Cosine-sum approximation of e^{-t^2/2 sigma} with Hermite-zero frequencies.

The frequencies are fixed analytically: the optimal exponents of the
length-N exponential sum in L^2(R, e^{-t^2/2 rho}) are the zeros of a
scaled Hermite polynomial, purely imaginary and symmetric.  Only the real
coefficients remain to be solved for, from an SPD Gram system.  Everything
downstream depends on (sigma, rho) only through the quotient r = rho/sigma,
up to a global rescaling of the time axis.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .hermite import HermiteRule, hermite_rule
from .linalg import spd_solve_pivoted

__all__ = [
    "GaussianTarget",
    "CosineSumApprox",
    "CharPolyCoeffs",
    "frequencies",
    "char_poly_coeffs",
    "solve_coefficients",
    "solve_coefficients_folded",
    "approximate",
    "quadrature_coefficients",
    "approx_to_json",
    "approx_from_json",
]


@dataclass(frozen=True)
class GaussianTarget:
    """Target e^{-t^2/2 sigma} measured in L^2(R, e^{-t^2/2 rho})."""

    sigma: float
    rho: float

    def __post_init__(self):
        if self.sigma <= 0 or self.rho <= 0:
            raise ValueError("sigma and rho must be positive")

    @property
    def r(self) -> float:
        return self.rho / self.sigma

    def __call__(self, t):
        return np.exp(-np.asarray(t, dtype=float) ** 2 / (2.0 * self.sigma))

    def freq_scale(self) -> float:
        """|lambda_j| / t_j: sqrt(2(rho+sigma) / (sigma(2 rho+sigma)))."""
        return math.sqrt(
            2.0 * (self.rho + self.sigma)
            / (self.sigma * (2.0 * self.rho + self.sigma))
        )

    def weighted_mass(self) -> float:
        """int e^{-t^2/sigma} e^{-t^2/2 rho} dt = sqrt(2 pi rho sigma/(2 rho+sigma))."""
        return math.sqrt(
            2.0 * math.pi * self.rho * self.sigma
            / (2.0 * self.rho + self.sigma)
        )


@dataclass(frozen=True)
class CosineSumApprox:
    """Result of the differential method: sum_j coeffs[j] cos(freqs[j] t).

    freqs[j] stores the signed imaginary part of lambda_j; the sign pairs
    cancel, so evaluation is a cosine sum of length floor((N+1)/2).
    Symmetry freqs[j] = -freqs[N-1-j] and coeffs[j] = coeffs[N-1-j] holds
    exactly (enforced at construction).
    """

    target: GaussianTarget
    freqs: np.ndarray
    coeffs: np.ndarray

    @property
    def N(self) -> int:
        return len(self.freqs)

    def __post_init__(self):
        if len(self.freqs) != len(self.coeffs):
            raise ValueError("freqs and coeffs must have equal length")
        if np.any(self.freqs != -self.freqs[::-1]):
            raise ValueError("frequencies must be antisymmetric")
        if np.any(self.coeffs != self.coeffs[::-1]):
            raise ValueError("coefficients must be symmetric")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return np.cos(np.multiply.outer(t, self.freqs)) @ self.coeffs


@dataclass(frozen=True)
class CharPolyCoeffs:
    """Monic characteristic polynomial lambda^N + sum b_k lambda^k."""

    N: int
    b: np.ndarray = field(repr=False)


def frequencies(target: GaussianTarget, N: int,
                rule: HermiteRule | None = None) -> np.ndarray:
    """Signed imaginary parts Im lambda_j = -freq_scale * t_j, j = 1..N."""
    if rule is None:
        rule = hermite_rule(N)
    if rule.degree != N:
        raise ValueError("rule degree must equal N")
    return -target.freq_scale() * rule.zeros


def char_poly_coeffs(target: GaussianTarget, N: int) -> CharPolyCoeffs:
    """Closed-form coefficients of the minimizing differential operator:

        b_k = N!/(k! ((N-k)/2)!) * ((rho+sigma)/(2 sigma (2 rho+sigma)))^{(N-k)/2}

    for N-k even, zero otherwise.  Built by incremental ratios from
    b_N = 1 downward, so no factorial is ever formed.
    """
    if not 1 <= N <= 40:
        raise ValueError("N must be in 1..40")
    q = (target.rho + target.sigma) / (
        2.0 * target.sigma * (2.0 * target.rho + target.sigma)
    )
    b = np.zeros(N)
    # step N-k = 2m -> 2m+2:  b_{k-2}/b_k = q * k(k-1)/(m+1)
    val = 1.0
    k = N
    m = 0
    while k >= 2:
        val *= q * k * (k - 1) / (m + 1)
        k -= 2
        m += 1
        b[k] = val
    return CharPolyCoeffs(N, b)


def _gram_and_rhs(target: GaussianTarget,
                  freqs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # the (2 pi rho)^{-1/2}-scaled normal equations; in terms of the Hermite
    # zeros t_j these are exp(-s0 (t_j-t_k)^2) and (1+r)^{-1/2} exp(-r t_k^2/(2r+1))
    sigma, rho = target.sigma, target.rho
    diff = freqs[:, None] - freqs[None, :]
    H = np.exp(-rho * diff ** 2 / 2.0)
    g = math.sqrt(sigma / (sigma + rho)) * np.exp(
        -sigma * rho * freqs ** 2 / (2.0 * (sigma + rho))
    )
    return H, g


def solve_coefficients(target: GaussianTarget,
                       freqs: np.ndarray) -> np.ndarray:
    """Coefficients gamma_j from the SPD Gram system, then symmetrized.

    Works for any antisymmetric frequency vector (Hermite-zero or
    pencil-derived); the solution depends on sigma, rho only through
    r = rho/sigma because the (2 pi rho)^{-1/2} scaling cancels.
    """
    H, g = _gram_and_rhs(target, np.asarray(freqs, dtype=float))
    gamma = spd_solve_pivoted(H, g)
    return 0.5 * (gamma + gamma[::-1])


def solve_coefficients_folded(target: GaussianTarget,
                              freqs: np.ndarray) -> np.ndarray:
    """Equivalent half-size solve exploiting gamma_j = gamma_{N+1-j}.

    Folding mirror columns of the Gram matrix onto each other gives a
    system of size ceil(N/2); the result is unfolded back to length N.
    Cross-check path for solve_coefficients.
    """
    freqs = np.asarray(freqs, dtype=float)
    N = len(freqs)
    H, g = _gram_and_rhs(target, freqs)
    half = (N + 1) // 2
    Hf = H[:half, :half].copy()
    # fold the mirrored column onto its pair; the center of odd N is its own pair
    for j in range(N // 2):
        Hf[:, j] += H[:half, N - 1 - j]
    gamma_half = np.linalg.solve(Hf, g[:half])
    gamma = np.empty(N)
    gamma[:half] = gamma_half
    gamma[half:] = gamma_half[: N // 2][::-1]
    return gamma


def approximate(target: GaussianTarget, N: int,
                rule: HermiteRule | None = None) -> CosineSumApprox:
    """Full differential method: Hermite-zero frequencies + Gram solve."""
    if rule is None:
        rule = hermite_rule(N)
    freqs = frequencies(target, N, rule)
    coeffs = solve_coefficients(target, freqs)
    return CosineSumApprox(target, freqs, coeffs)


def quadrature_coefficients(target: GaussianTarget,
                            rule: HermiteRule) -> np.ndarray:
    """Proof-side suboptimal coefficients built from Gauss-Hermite weights:

        gamma_j = sqrt(r+1)/sqrt(pi(2r+1)) * e^{(s0-2 s1) t_j^2} * w_j

    with s0 = r(1+r)/(2r+1), s1 = r^2/(2(2r+1)).  Since s0 - 2 s1 =
    r/(2r+1) < 1, the scaled-weight form w_j e^{t_j^2} keeps the
    exponentials bounded: the result is scaled_w * e^{-(1 - r/(2r+1)) t^2}.
    """
    r = target.r
    pref = math.sqrt(r + 1.0) / math.sqrt(math.pi * (2.0 * r + 1.0))
    expo = r / (2.0 * r + 1.0) - 1.0  # (s0 - 2 s1) - 1, applied to scaled w
    return pref * rule.scaled_weights * np.exp(expo * rule.zeros ** 2)


def approx_to_json(approx: CosineSumApprox) -> str:
    """Serialize as {sigma, rho, N, freqs, coeffs}, reals at 17 sig digits."""
    def fmt(x: float) -> str:
        return format(x, ".17g")

    obj = {
        "sigma": fmt(approx.target.sigma),
        "rho": fmt(approx.target.rho),
        "N": approx.N,
        "freqs": [fmt(v) for v in approx.freqs],
        "coeffs": [fmt(v) for v in approx.coeffs],
    }
    return json.dumps(obj, indent=2)


def approx_from_json(text: str) -> CosineSumApprox:
    obj = json.loads(text)
    target = GaussianTarget(float(obj["sigma"]), float(obj["rho"]))
    return CosineSumApprox(
        target,
        np.array([float(v) for v in obj["freqs"]]),
        np.array([float(v) for v in obj["coeffs"]]),
    )
