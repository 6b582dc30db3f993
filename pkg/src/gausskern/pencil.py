"""Matrix-pencil form of the differential method.

The minimizing differential operator is the null vector of a structured
N x (N+1) matrix whose entries are weighted Hermite cross-integrals, given
in closed form by terminating 2F1 values (or, equivalently, a Gamma double
sum).  The SVD-based pencil extracted from its right singular factor has
the scaled Hermite zeros as eigenvalues, which is how this route is tested
against the direct one.

Double precision carries this to N ~ 13; beyond that the pencil eigenvalues
drift off the imaginary axis and pencil_frequencies raises
ProjectionFailure instead of returning garbage.
"""

from __future__ import annotations

import math

import numpy as np

from .approx import GaussianTarget
from .linalg import DEFAULT_CUTOFF, pencil_eigenvalues, thin_svd
from .special import gamma_fn, hyp2f1_terminating, upper_incomplete_gamma

__all__ = [
    "ProjectionFailure",
    "build_A",
    "build_A_double_sum",
    "build_A_truncated",
    "pencil_frequencies",
    "PENCIL_N_MAX",
]

PENCIL_N_MAX = 13


class ProjectionFailure(RuntimeError):
    """A pencil eigenvalue strayed too far from the imaginary axis."""


def build_A(target: GaussianTarget, N: int) -> np.ndarray:
    """N x (N+1) matrix A with the hypergeometric closed form

        A[j, m] = (-1)^{(m+j)/2} sqrt(2 rho sigma/(2 rho+sigma))
                  * (2(rho+sigma)/(sigma(2 rho+sigma)))^{(m+j)/2}
                  * Gamma((m+j+1)/2) * 2F1(-m, -j; (1-m-j)/2; z)

    with z = (2 rho+sigma)/(2(rho+sigma)), for j+m even; zero otherwise.
    """
    if not 1 <= N <= 20:
        raise ValueError("N must be in 1..20")
    sigma, rho = target.sigma, target.rho
    pref = math.sqrt(2.0 * rho * sigma / (2.0 * rho + sigma))
    base = 2.0 * (rho + sigma) / (sigma * (2.0 * rho + sigma))
    z = (2.0 * rho + sigma) / (2.0 * (rho + sigma))
    A = np.zeros((N, N + 1))
    for j in range(N):
        for m in range(j % 2, N + 1, 2):
            half = (m + j) // 2
            A[j, m] = (
                (-1.0) ** half
                * pref
                * base ** half
                * gamma_fn((m + j + 1) / 2.0)
                * hyp2f1_terminating(m, j, z)
            )
    return A


def _double_sum_entry(j: int, m: int, q: float, tail) -> float:
    # sum over the monomial expansions of H_j and H_m; `tail` maps the
    # Gamma argument to the (possibly truncated) Gamma value
    total = 0.0
    fj = math.factorial(j)
    fm = math.factorial(m)
    for k in range(j // 2 + 1):
        for ell in range(m // 2 + 1):
            coef = (
                (-1.0) ** (k + ell)
                * fj * fm
                / (
                    math.factorial(k)
                    * math.factorial(ell)
                    * math.factorial(j - 2 * k)
                    * math.factorial(m - 2 * ell)
                )
                * q ** (k + ell)
            )
            total += coef * tail((j + m - 2 * k - 2 * ell + 1) / 2.0)
    return total


def build_A_double_sum(target: GaussianTarget, N: int) -> np.ndarray:
    """Same matrix as build_A via the independent Gamma double sum."""
    if not 1 <= N <= 20:
        raise ValueError("N must be in 1..20")
    sigma, rho = target.sigma, target.rho
    pref = math.sqrt(2.0 * sigma * rho / (2.0 * rho + sigma))
    base = 2.0 * rho / (sigma * (2.0 * rho + sigma))
    q = (2.0 * rho + sigma) / (4.0 * rho)
    A = np.zeros((N, N + 1))
    for j in range(N):
        for m in range(j % 2, N + 1, 2):
            A[j, m] = (
                pref * base ** ((j + m) // 2)
                * _double_sum_entry(j, m, q, gamma_fn)
            )
    return A


def build_A_truncated(target: GaussianTarget, N: int, T: float) -> np.ndarray:
    """Finite-interval variant A(T): integrals over [-T, T] instead of R.

    Each Gamma(z) in the double sum becomes Gamma(z) - Gamma(z, eta T^2)
    with eta = (2 rho+sigma)/(2 sigma rho); A(T) -> A as T -> inf.
    """
    if T < 0:
        raise ValueError("T must be nonnegative")
    sigma, rho = target.sigma, target.rho
    eta_T2 = (2.0 * rho + sigma) / (2.0 * sigma * rho) * T * T
    pref = math.sqrt(2.0 * sigma * rho / (2.0 * rho + sigma))
    base = 2.0 * rho / (sigma * (2.0 * rho + sigma))
    q = (2.0 * rho + sigma) / (4.0 * rho)

    def tail(z: float) -> float:
        return gamma_fn(z) - upper_incomplete_gamma(z, eta_T2)

    A = np.zeros((N, N + 1))
    for j in range(N):
        for m in range(j % 2, N + 1, 2):
            A[j, m] = (
                pref * base ** ((j + m) // 2)
                * _double_sum_entry(j, m, q, tail)
            )
    return A


def pencil_frequencies(target: GaussianTarget, N: int,
                       cutoff: float = DEFAULT_CUTOFF,
                       T: float | None = None,
                       allow_large_N: bool = False) -> np.ndarray:
    """Frequencies Im lambda_j from the SVD pencil of A (or A(T)).

    Eigenvalues of pinv(W0^T) @ W1^T are projected onto the imaginary
    axis and symmetrized; they are provably purely imaginary, so a real
    part above 1e-6 relative signals conditioning breakdown and raises
    ProjectionFailure.  Sorted to match approx.frequencies (ascending
    Im lambda, i.e. descending Hermite zero).
    """
    if N > PENCIL_N_MAX and not allow_large_N:
        raise ValueError(
            f"N={N} exceeds the double-precision validity window "
            f"(N <= {PENCIL_N_MAX}); pass allow_large_N=True to override"
        )
    A = build_A(target, N) if T is None else build_A_truncated(target, N, T)
    _, _, V = thin_svd(A)
    W = V.T  # rows are right singular vectors
    W0 = W[:N, :N]
    W1 = W[:N, 1:N + 1]
    eig = pencil_eigenvalues(W0, W1, cutoff)
    # the center eigenvalue of odd N is a true zero, so measure real parts
    # against the scale of the whole spectrum, not each eigenvalue alone
    scale = max(float(np.max(np.abs(eig))), 1e-300)
    if np.max(np.abs(eig.real)) > 1e-6 * scale:
        worst = eig[np.argmax(np.abs(eig.real))]
        raise ProjectionFailure(
            f"eigenvalue {worst:.3e} has relative real part above 1e-6 "
            f"(N={N}; expected breakdown for N >= 14)"
        )
    ims = np.sort(eig.imag)
    # pair +/- values by magnitude and average to enforce exact antisymmetry
    sym = 0.5 * (ims - ims[::-1])
    if N % 2:
        sym[N // 2] = 0.0
    return sym
