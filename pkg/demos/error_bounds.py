"""Measure the theoretical error laws on real runs.

Four diagnostics: the exponential decay law of the weighted error, the
finite-interval truncation law at rho = sigma/2, the N^{3/2} growth law of
the scaled quadrature weight sum, and the pointwise quadrature-error
inequality feeding the main bound.
"""

import math

from gausskern import (
    GaussianTarget,
    MN_diagnostic,
    approximate,
    closed_form_error,
    lemma31_bound_check,
    thm31_bound,
    truncated_L2_error,
)
from gausskern.hermite import hermite_rule

target = GaussianTarget(sigma=1.0, rho=0.5)
r = target.r
print(f"r = {r:g}, decay base r/sqrt(2(2r+1)) = "
      f"{r / math.sqrt(2 * (2 * r + 1)):g}")

c = closed_form_error(target, approximate(target, 2)) / thm31_bound(r, 2)
print()
print(" N   weighted error   c * rate^N * N^0.75")
for N in range(2, 13):
    e = closed_form_error(target, approximate(target, N))
    print(f"{N:2d}   {e:14.6e}   {c * thm31_bound(r, N):14.6e}")

print()
print("truncation to [-T, T] with T = sqrt(2 sigma N ln 2):")
print(" N      T      L2(R) error of the truncated sum")
for N in range(4, 13, 2):
    T, e = truncated_L2_error(target, approximate(target, N))
    print(f"{N:2d}   {T:6.3f}   {e:.6e}")

print()
print("scaled weight sum M_N against N^1.5:")
for N in (5, 10, 20, 50, 100):
    MN, ratio = MN_diagnostic(hermite_rule(N))
    print(f"  N = {N:3d}   M_N = {MN:10.4f}   M_N/N^1.5 = {ratio:.4f}")

print()
print("pointwise quadrature-error inequality, N = 10 (lhs < rhs):")
rule = hermite_rule(10)
for k in range(5):
    lhs, rhs = lemma31_bound_check(target, rule, k)
    print(f"  k = {k}   lhs = {lhs:.3e}   rhs = {rhs:.3e}")
