"""Prony's method from derivative samples of the Gaussian at the origin.

A Hankel matrix of the exact derivative values f^{(k)}(0) takes the place
of the integral matrix of the pencil route; frequencies come out of the
same SVD pencil, coefficients from a Vandermonde least-squares fit.  No
imaginary-axis projection is applied here: the raw (complex) output is the
point of the comparison with the differential method.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_CUTOFF, least_squares, pencil_eigenvalues

__all__ = [
    "DerivativeTable",
    "derivative_values",
    "prony_frequencies",
    "prony_coefficients",
    "prony_approximate",
]


@dataclass(frozen=True)
class DerivativeTable:
    """Derivatives of e^{-t^2/2 sigma} at 0: values[k] = f^{(k)}(0)."""

    sigma: float
    values: np.ndarray

    @property
    def L(self) -> int:
        return len(self.values) - 1


def derivative_values(sigma: float, L: int) -> DerivativeTable:
    """f^{(k)}(0) = (-1)^{k/2} sigma^{-k/2} (k-1)!! for even k, 0 for odd.

    Built by the ratio f^{(k+2)}(0) = -(k+1)/sigma * f^{(k)}(0), which
    stays finite until k ~ 300 where the double factorial overflows.
    """
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    if L < 1:
        raise ValueError("L must be >= 1")
    vals = np.zeros(L + 1)
    vals[0] = 1.0
    for k in range(0, L - 1, 2):
        vals[k + 2] = -(k + 1) / sigma * vals[k]
    return DerivativeTable(sigma, vals)


def _hankel_scaled(table: DerivativeTable, N: int) -> tuple[np.ndarray, float]:
    # Balance the sigma^{-k/2} (k-1)!! dynamic range by the substitution
    # g_m = f^{(m)}(0) * s^m, which rescales every pencil eigenvalue by s.
    L = table.L
    s = math.sqrt(table.sigma / max(L, 1))
    scaled = table.values * s ** np.arange(L + 1)
    rows = L - N
    H = np.empty((rows, N + 1))
    for k in range(rows):
        H[k, :] = scaled[k:k + N + 1]
    return H, s


def prony_frequencies(sigma: float, N: int, L: int | None = None,
                      cutoff: float = DEFAULT_CUTOFF) -> np.ndarray:
    """Frequencies as eigenvalues of the Hankel SVD pencil (complex).

    L defaults to 2N; the spec of the method needs L >= 2N - 1.
    """
    if L is None:
        L = 2 * N
    if L < 2 * N - 1:
        raise ValueError("L must be >= 2N - 1")
    table = derivative_values(sigma, L)
    H, s = _hankel_scaled(table, N)
    # full SVD: for L = 2N-1 the Hankel has fewer rows than columns and the
    # thin right factor would not span all N+1 rows of W
    _, _, Vh = np.linalg.svd(H, full_matrices=True)
    W = Vh
    W0 = W[:N, :N]
    W1 = W[:N, 1:N + 1]
    return pencil_eigenvalues(W0, W1, cutoff) / s


def prony_coefficients(freqs: np.ndarray, table: DerivativeTable,
                       cutoff: float = DEFAULT_CUTOFF) -> np.ndarray:
    """Least-squares solve of sum_j gamma_j lambda_j^k = f^{(k)}(0), k=0..L."""
    freqs = np.asarray(freqs)
    L = table.L
    if L + 1 < len(freqs):
        raise ValueError("need at least as many equations as unknowns")
    V = np.vander(freqs.astype(complex), L + 1, increasing=True).T
    return least_squares(V, table.values.astype(complex), cutoff)


def prony_approximate(sigma: float, N: int, L: int | None = None,
                      cutoff: float = DEFAULT_CUTOFF
                      ) -> tuple[np.ndarray, np.ndarray]:
    """Run the full method; returns (freqs, coeffs), both complex."""
    if L is None:
        L = 2 * N
    freqs = prony_frequencies(sigma, N, L, cutoff)
    coeffs = prony_coefficients(freqs, derivative_values(sigma, L), cutoff)
    return freqs, coeffs
