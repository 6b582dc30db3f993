import math

import numpy as np
import pytest

from gausskern.approx import GaussianTarget, approximate, frequencies
from gausskern.errors import (
    CSV_HEADER,
    ErrorReport,
    MN_diagnostic,
    closed_form_error,
    lemma31_bound_check,
    oracle_error,
    report_row,
    thm31_bound,
    truncated_L2_error,
    weighted_error_exponential_sum,
    weighted_error_quadratic,
)
from gausskern.hermite import hermite_rule

TG = GaussianTarget(0.8, 1.0)

# [DERIVED] 40-digit mpmath evaluation of sqrt(F) at the exact minimizer,
# sigma=0.8 rho=1 N=6, frozen
ERR6 = 0.0046000665038702183


def test_closed_form_error_oracle_value():
    assert closed_form_error(TG, approximate(TG, 6)) == pytest.approx(
        ERR6, rel=1e-10)


def test_closed_form_vs_quadrature_oracle():
    for N in (3, 6, 9):
        ap = approximate(TG, N)
        e_closed = closed_form_error(TG, ap)
        e_quad = oracle_error(TG, ap)
        assert e_quad == pytest.approx(e_closed, rel=1e-7)


def test_error_decreases_with_N():
    errs = [closed_form_error(TG, approximate(TG, N)) for N in range(1, 11)]
    assert np.all(np.diff(errs) < 0)


def test_quadratic_form_at_zero_coefficients():
    # F(0) = m0: no approximation at all
    mus = frequencies(TG, 4)
    F, flagged = weighted_error_quadratic(TG, mus, np.zeros(4))
    assert F == pytest.approx(TG.weighted_mass(), rel=1e-15)
    assert not flagged


def test_quadratic_form_noise_clamp():
    # deep in the noise floor the clamped value is 0 and flagged
    tg = GaussianTarget(1.0, 0.5)
    from gausskern.approx import solve_coefficients
    mus = frequencies(tg, 14)
    gam = solve_coefficients(tg, mus)
    F, flagged = weighted_error_quadratic(tg, mus, gam)
    assert F >= 0.0
    if F == 0.0:
        assert flagged


def test_exponential_sum_error_reduces_to_real_case():
    ap = approximate(TG, 5)
    lam = 1j * ap.freqs
    e_cplx = weighted_error_exponential_sum(TG, lam, ap.coeffs.astype(complex))
    assert e_cplx == pytest.approx(closed_form_error(TG, ap), rel=1e-9)


def test_oracle_error_unweighted_larger():
    ap = approximate(TG, 6)
    assert oracle_error(TG, ap, weighted=False) > oracle_error(TG, ap)


def test_truncated_L2_error_values():
    tg = GaussianTarget(1.0, 0.5)
    ap = approximate(tg, 8)
    T, e = truncated_L2_error(tg, ap)
    assert T == pytest.approx(math.sqrt(2 * 8 * math.log(2)), rel=1e-15)
    # contains the unweighted error on [-T, T] plus the exact Gaussian tail
    assert e > 0
    tail = math.sqrt(math.pi) * math.erfc(T)
    assert e ** 2 >= tail * 0.999999


def test_thm31_bound_values():
    # rate base r/sqrt(2(2r+1)): 1/4 at r = 1/2
    assert thm31_bound(0.5, 4) == pytest.approx(0.25 ** 4 * 4 ** 0.75,
                                                rel=1e-14)
    # no decay at r >= 2 + sqrt(6)
    base = thm31_bound(2 + math.sqrt(6), 2) / 2 ** 0.75
    assert base ** 0.5 == pytest.approx(1.0, rel=1e-12)
    with pytest.raises(ValueError):
        thm31_bound(-1.0, 3)


def test_MN_diagnostic():
    rule = hermite_rule(10)
    MN, ratio = MN_diagnostic(rule)
    assert MN == pytest.approx(float(np.sum(rule.scaled_weights)), rel=1e-15)
    assert ratio == pytest.approx(MN / 10 ** 1.5, rel=1e-15)


def test_lemma31_bound_holds():
    for r in (0.5, 1.0, 1.25):
        tg = GaussianTarget(1.0, r)
        for N in (3, 8, 12):
            rule = hermite_rule(N)
            for k in range(N):
                lhs, rhs = lemma31_bound_check(tg, rule, k)
                assert lhs < rhs


def test_report_row_format():
    rep = ErrorReport(sigma=1.0, rho=0.5, N=3, method="hermite",
                      weighted_error=0.011520021589430777)
    row = report_row(rep)
    fields = row.split(",")
    assert len(fields) == len(CSV_HEADER.split(","))
    assert fields[3] == "hermite"
    assert fields[4] == "0.011520021589430777"
    assert fields[5] == ""  # unset optional column stays empty
