"""Physicists' Hermite polynomials, Hermite functions and Gauss-Hermite rules.

Everything here uses the physicists' convention: weight e^{-t^2}, leading
coefficient 2^n.  Quadrature nodes are returned in descending order
t_1 > ... > t_N with exact mirror symmetry t_j = -t_{N+1-j}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

__all__ = [
    "HermiteRule",
    "ZeroConvergenceError",
    "hermite_eval",
    "hermite_function",
    "hermite_function_pair",
    "hermite_rule",
    "scaling_expansion_check",
    "read_rule_cache",
    "write_rule_cache",
]

_PI_QUARTER = math.pi ** (-0.25)


class ZeroConvergenceError(RuntimeError):
    """Newton iteration on a Hermite-function zero failed to converge."""


@dataclass(frozen=True)
class HermiteRule:
    """N-point Gauss-Hermite rule.

    zeros are descending; weights[j] is the classical weight w_j and
    scaled_weights[j] = w_j * e^{t_j^2}, kept separately because the plain
    weights underflow long before the scaled ones do.
    """

    degree: int
    zeros: np.ndarray
    weights: np.ndarray
    scaled_weights: np.ndarray

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive")
        if len(self.zeros) != self.degree or len(self.weights) != self.degree:
            raise ValueError("inconsistent rule arrays")


def hermite_eval(n: int, t: float) -> float:
    """H_n(t) by the three-term recurrence H_{n+1} = 2t H_n - 2n H_{n-1}.

    Overflows to inf for very large n*t; callers needing large degrees
    should work with the normalized Hermite functions instead.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    h_prev, h = 1.0, 2.0 * t
    if n == 0:
        return h_prev
    for k in range(1, n):
        h_prev, h = h, 2.0 * t * h - 2.0 * k * h_prev
    return h


def hermite_function_pair(n: int, t: float) -> tuple[float, float]:
    """Return (psi_n(t), psi_{n-1}(t)), with psi_{-1} := 0.

    psi_n(t) = (2^n n! sqrt(pi))^{-1/2} e^{-t^2/2} H_n(t), computed by the
    normalized recurrence
        psi_{n+1} = t*sqrt(2/(n+1))*psi_n - sqrt(n/(n+1))*psi_{n-1},
    which never forms 2^n n! explicitly.
    """
    psi_prev = 0.0
    psi = _PI_QUARTER * math.exp(-0.5 * t * t)
    for k in range(n):
        psi_prev, psi = psi, t * math.sqrt(2.0 / (k + 1)) * psi - math.sqrt(
            k / (k + 1.0)
        ) * psi_prev
    return psi, psi_prev


def hermite_function(n: int, t: float) -> float:
    """Orthonormal Hermite function psi_n(t)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return hermite_function_pair(n, t)[0]


def _psi_and_derivative(n: int, t: float) -> tuple[float, float]:
    # psi_n'(t) = -t psi_n(t) + sqrt(2n) psi_{n-1}(t)
    psi, psi_prev = hermite_function_pair(n, t)
    return psi, -t * psi + math.sqrt(2.0 * n) * psi_prev


def _positive_zeros(n: int, guesses: np.ndarray, tol: float = 1e-14,
                    maxiter: int = 100) -> np.ndarray:
    zeros = np.empty(len(guesses))
    for i, t0 in enumerate(guesses):
        t = float(t0)
        for _ in range(maxiter):
            psi, dpsi = _psi_and_derivative(n, t)
            step = psi / dpsi
            t -= step
            if abs(psi) <= tol and abs(step) <= 1e-15 * max(1.0, abs(t)):
                break
        else:
            raise ZeroConvergenceError(
                f"zero of psi_{n} near {t0:.6g} did not converge"
            )
        zeros[i] = t
    return zeros


def hermite_rule(N: int) -> HermiteRule:
    """Gauss-Hermite nodes and weights for H_N.

    Nodes: eigenvalue (Golub-Welsch) initial guesses, polished by Newton on
    the Hermite function psi_N (the polynomial itself overflows past
    N ~ 150); the positive half is mirrored so symmetry is exact.
    Weights: w_j = 1 / ((N+1) e^{t_j^2} psi_{N+1}(t_j)^2), with the factor
    e^{t_j^2} kept separate in scaled_weights.
    """
    if not 1 <= N <= 200:
        raise ValueError("N must be in 1..200")
    if N == 1:
        sw = np.array([math.sqrt(math.pi)])
        return HermiteRule(1, np.array([0.0]), sw.copy(), sw)

    # Jacobi matrix of the (monic) Hermite recurrence: offdiag sqrt(k/2).
    offdiag = np.sqrt(np.arange(1, N) / 2.0)
    guesses = eigh_tridiagonal(np.zeros(N), offdiag, eigvals_only=True)
    pos = _positive_zeros(N, guesses[guesses > 1e-12][::-1])

    half = N // 2
    zeros = np.empty(N)
    zeros[:half] = pos[np.argsort(pos)[::-1]]
    if N % 2:
        zeros[half] = 0.0
    zeros[N - half:] = -zeros[:half][::-1]

    scaled = np.empty(N)
    for j, t in enumerate(zeros):
        psi1 = hermite_function(N + 1, t)
        scaled[j] = 1.0 / ((N + 1) * psi1 * psi1)
    weights = scaled * np.exp(-zeros ** 2)
    # mirror pairs get identical weights by construction; enforce exactly
    weights = 0.5 * (weights + weights[::-1])
    scaled = 0.5 * (scaled + scaled[::-1])
    return HermiteRule(N, zeros, weights, scaled)


def scaling_expansion_check(N: int, a: float, npoints: int = 50) -> float:
    """Max residual of the Hermite scaling identity

        H_N(a*tau) = sum_r N!/(r!(N-2r)!) (a^2-1)^r a^{N-2r} H_{N-2r}(tau)

    over npoints sample points tau in [-3, 3].  Test helper; N <= 30.
    """
    if N > 30:
        raise ValueError("N too large for direct factorials")
    taus = np.linspace(-3.0, 3.0, npoints)
    worst = 0.0
    for tau in taus:
        lhs = hermite_eval(N, a * tau)
        rhs = 0.0
        for r in range(N // 2 + 1):
            coef = (
                math.factorial(N)
                / (math.factorial(r) * math.factorial(N - 2 * r))
                * (a * a - 1.0) ** r
                * a ** (N - 2 * r)
            )
            rhs += coef * hermite_eval(N - 2 * r, tau)
        worst = max(worst, abs(lhs - rhs))
    return worst


def write_rule_cache(path: str, rules: list[HermiteRule]) -> None:
    """Plain-text cache, one line per node: 'N j t_j w_j' (17 sig digits)."""
    with open(path, "w") as fh:
        for rule in rules:
            for j, (t, w) in enumerate(zip(rule.zeros, rule.weights), start=1):
                fh.write(f"{rule.degree} {j} {t:.17g} {w:.17g}\n")


def read_rule_cache(path: str) -> dict[int, HermiteRule]:
    """Read a cache written by write_rule_cache.

    Scaled weights are recomputed from psi_{N+1} rather than as w*e^{t^2},
    which would lose accuracy once w underflows toward the double floor.
    """
    records: dict[int, list[tuple[int, float, float]]] = {}
    with open(path) as fh:
        for line in fh:
            if not line.strip():
                continue
            n_s, j_s, t_s, w_s = line.split()
            records.setdefault(int(n_s), []).append(
                (int(j_s), float(t_s), float(w_s))
            )
    rules = {}
    for N, rows in records.items():
        rows.sort()
        zeros = np.array([t for _, t, _ in rows])
        weights = np.array([w for _, _, w in rows])
        scaled = np.empty(N)
        for j, t in enumerate(zeros):
            psi1 = hermite_function(N + 1, t)
            scaled[j] = 1.0 / ((N + 1) * psi1 * psi1)
        rules[N] = HermiteRule(N, zeros, weights, scaled)
    return rules
