"""Build a short cosine sum for the Gaussian and watch the error decay.

The frequencies are zeros of a scaled Hermite polynomial, so only a small
SPD system has to be solved for the coefficients.  The weighted error has
a closed form; an adaptive-quadrature oracle confirms it.
"""

import numpy as np

from gausskern import (
    GaussianTarget,
    approximate,
    closed_form_error,
    oracle_error,
)

target = GaussianTarget(sigma=0.8, rho=1.0)

print(f"target: exp(-t^2/{2 * target.sigma:g}), "
      f"weight exp(-t^2/{2 * target.rho:g}), r = {target.r:g}")
print()
print(" N   weighted error   quadrature oracle")
for N in range(1, 13):
    ap = approximate(target, N)
    e = closed_form_error(target, ap)
    print(f"{N:2d}   {e:14.6e}   {oracle_error(target, ap):14.6e}")

ap = approximate(target, 10)
print()
print("N = 10 cosine sum:")
half = ap.N // 2
for mu, gam in zip(ap.freqs[half:], ap.coeffs[half:]):
    print(f"  {2 * gam:+.12f} * cos({mu:.12f} t)")

t = np.linspace(-3, 3, 7)
print()
print("pointwise check on [-3, 3]:")
for ti, fi, gi in zip(t, target(t), ap(t)):
    print(f"  t = {ti:+.1f}   f = {fi:.10f}   sum = {gi:.10f}")
