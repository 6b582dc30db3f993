"""Small dense kernels: pivoted-Cholesky SPD solve, thin SVD, pencil eigenvalues.

All matrices here are tiny (at most ~200x200); SVD, eigenvalues and least
squares are delegated to LAPACK through numpy.  The pivoted Cholesky is
written out explicitly because its failure mode carries meaning: a
nonpositive pivot is how we detect that the Gram matrix of near-coincident
Gaussians has lost definiteness in floating point.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "NotPositiveDefinite",
    "spd_solve_pivoted",
    "thin_svd",
    "pencil_eigenvalues",
    "least_squares",
]

PIVOT_EPS = 1e-14
DEFAULT_CUTOFF = 1e-13


class NotPositiveDefinite(ValueError):
    """Raised when a pivot drops below eps * max initial diagonal."""

    def __init__(self, msg, pivot_index=None):
        super().__init__(msg)
        self.pivot_index = pivot_index


def spd_solve_pivoted(A: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve A x = b for symmetric positive definite A by pivoted Cholesky.

    Diagonal pivoting: at each step the largest remaining diagonal entry is
    moved to the pivot position.  Raises NotPositiveDefinite if a pivot
    falls to <= PIVOT_EPS times the largest initial diagonal entry.
    """
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n) or b.shape != (n,):
        raise ValueError("shape mismatch")
    if n and np.max(np.abs(A - A.T)) > 1e-12 * max(1.0, np.max(np.abs(A))):
        raise ValueError("matrix not symmetric")

    M = A.copy()
    perm = np.arange(n)
    threshold = PIVOT_EPS * np.max(np.abs(np.diag(A))) if n else 0.0
    for i in range(n):
        j = i + int(np.argmax(np.diag(M)[i:]))
        if M[j, j] <= threshold:
            raise NotPositiveDefinite(
                f"pivot {M[j, j]:.3e} at step {i} of {n}", pivot_index=i
            )
        if j != i:
            M[[i, j], :] = M[[j, i], :]
            M[:, [i, j]] = M[:, [j, i]]
            perm[[i, j]] = perm[[j, i]]
        M[i, i] = np.sqrt(M[i, i])
        M[i + 1:, i] /= M[i, i]
        M[i + 1:, i + 1:] -= np.outer(M[i + 1:, i], M[i + 1:, i])
        M[i, i + 1:] = 0.0

    # forward/back substitution on the permuted system
    pb = b[perm]
    y = np.zeros(n)
    for i in range(n):
        y[i] = (pb[i] - M[i, :i] @ y[:i]) / M[i, i]
    x = np.zeros(n)
    for i in range(n - 1, -1, -1):
        x[i] = (y[i] - M[i + 1:, i] @ x[i + 1:]) / M[i, i]
    out = np.zeros(n)
    out[perm] = x
    return out


def thin_svd(A: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """A = U diag(s) V^T with singular values descending, U/V thin."""
    U, s, Vh = np.linalg.svd(np.asarray(A, dtype=float), full_matrices=False)
    return U, s, Vh.T


def _pinv(A: np.ndarray, cutoff: float) -> np.ndarray:
    U, s, V = thin_svd(A)
    smax = s[0] if len(s) else 0.0
    inv = np.where(s > cutoff * smax, 1.0 / np.where(s > 0, s, 1.0), 0.0)
    return V @ (inv[:, None] * U.T)


def pencil_eigenvalues(W0: np.ndarray, W1: np.ndarray,
                       cutoff: float = DEFAULT_CUTOFF) -> np.ndarray:
    """Eigenvalues of pinv(W0^T) @ W1^T.

    The pseudoinverse zeroes singular values below cutoff * s_max.
    """
    W0 = np.asarray(W0, dtype=float)
    W1 = np.asarray(W1, dtype=float)
    if W0.shape != W1.shape or W0.shape[0] != W0.shape[1]:
        raise ValueError("W0, W1 must be square and of equal size")
    return np.linalg.eigvals(_pinv(W0.T, cutoff) @ W1.T)


def least_squares(A: np.ndarray, b: np.ndarray,
                  cutoff: float = DEFAULT_CUTOFF) -> np.ndarray:
    """Minimum-norm least-squares solution of A x ~ b via SVD."""
    A = np.asarray(A)
    b = np.asarray(b)
    if A.shape[0] < A.shape[1]:
        raise ValueError("system must have at least as many rows as columns")
    x, *_ = np.linalg.lstsq(A, b, rcond=cutoff)
    return x
