import numpy as np
import pytest

from gausskern.approx import GaussianTarget, char_poly_coeffs, frequencies
from gausskern.pencil import (
    PENCIL_N_MAX,
    ProjectionFailure,
    build_A,
    build_A_double_sum,
    build_A_truncated,
    pencil_frequencies,
)

TG = GaussianTarget(0.8, 1.0)

# [DERIVED] direct quadrature of the defining integral
#   sqrt(2 sigma rho/(2 rho+sigma)) (-1)^{j+m} (2 sigma)^{-(j+m)/2}
#     int H_j(c tau) H_m(c tau) e^{-tau^2} dtau,  c = (2+sigma/rho)^{-1/2},
# sigma=0.8, rho=1, frozen
A_DIRECT = {
    (0, 0): 1.3398491713813578,
    (1, 1): 0.59814695150953479,
    (2, 4): -4.6606252423901395,
    (3, 5): -19.714316028756635,
}


def test_entries_against_direct_integral():
    A = build_A(TG, 6)
    for (j, m), val in A_DIRECT.items():
        assert A[j, m] == pytest.approx(val, rel=1e-12)


def test_parity_zeros():
    A = build_A(TG, 7)
    for j in range(7):
        for m in range(8):
            if (j + m) % 2:
                assert A[j, m] == 0.0


def test_two_formulas_agree():
    for (sigma, rho) in [(1.0, 1.0), (0.8, 1.0), (1.25, 0.625)]:
        tg = GaussianTarget(sigma, rho)
        for N in (3, 7, 10):
            A = build_A(tg, N)
            A2 = build_A_double_sum(tg, N)
            mask = A != 0
            rel = np.max(np.abs(A[mask] - A2[mask]) / np.abs(A[mask]))
            assert rel < 1e-11


def test_truncated_converges_to_full():
    A = build_A(TG, 6)
    prev = np.inf
    for T in (2.0, 4.0, 8.0):
        dev = np.max(np.abs(build_A_truncated(TG, 6, T) - A))
        assert dev < prev
        prev = dev
    assert prev < 1e-10


def test_truncated_at_zero_is_exactly_zero():
    A0 = build_A_truncated(TG, 6, 0.0)
    assert np.all(A0 == 0.0)


def test_truncated_validation():
    with pytest.raises(ValueError):
        build_A_truncated(TG, 4, -1.0)


def test_null_vector_property():
    # A @ (b_0, ..., b_{N-1}, 1) = 0: the characteristic polynomial of the
    # minimizing operator spans the null space
    for (sigma, rho) in [(1.0, 1.0), (0.8, 1.0), (1.25, 0.625)]:
        tg = GaussianTarget(sigma, rho)
        for N in (2, 5, 9):
            A = build_A(tg, N)
            b = np.append(char_poly_coeffs(tg, N).b, 1.0)
            assert np.linalg.norm(A @ b) < 1e-8 * np.linalg.norm(A)


def test_pencil_frequencies_match_hermite_zeros():
    for (sigma, rho) in [(1.0, 1.0), (0.8, 1.0), (1.25, 0.625)]:
        tg = GaussianTarget(sigma, rho)
        for N in (2, 5, 8, 10):
            pf = np.sort(pencil_frequencies(tg, N))
            fr = np.sort(frequencies(tg, N))
            scale = max(np.max(np.abs(fr)), 1.0)
            assert np.max(np.abs(pf - fr)) < 1e-7 * scale


def test_pencil_frequencies_truncated_variant():
    # large T reproduces the full-line frequencies
    pf = np.sort(pencil_frequencies(TG, 6, T=10.0))
    fr = np.sort(frequencies(TG, 6))
    assert np.max(np.abs(pf - fr)) < 1e-6 * np.max(np.abs(fr))


def test_pencil_antisymmetry_exact():
    pf = pencil_frequencies(TG, 7)
    assert np.all(pf == -pf[::-1])
    assert pf[3] == 0.0


def test_breakdown_beyond_double_precision():
    tg = GaussianTarget(1.0, 0.5)
    with pytest.raises(ValueError):
        pencil_frequencies(tg, PENCIL_N_MAX + 1)
    with pytest.raises(ProjectionFailure):
        pencil_frequencies(tg, 15, allow_large_N=True)


def test_build_A_range_validation():
    with pytest.raises(ValueError):
        build_A(TG, 0)
    with pytest.raises(ValueError):
        build_A(TG, 21)
