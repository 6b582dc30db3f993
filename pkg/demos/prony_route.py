"""Prony's method on derivative samples, compared with the direct route.

The Hankel matrix of exact Gaussian derivatives at the origin feeds the
same SVD pencil machinery.  Its output is complex in floating point and
its weighted error trails the differential method by orders of magnitude,
which is the point of the comparison.
"""

import numpy as np

from gausskern import (
    GaussianTarget,
    approximate,
    closed_form_error,
    derivative_values,
    prony_approximate,
    weighted_error_exponential_sum,
)

sigma = 0.8
target = GaussianTarget(sigma, 1.0)

table = derivative_values(sigma, 10)
print("derivatives of exp(-t^2/1.6) at 0:")
for k in range(0, 11, 2):
    print(f"  f^({k})(0) = {table.values[k]:+.6f}")

print()
print(" N   differential method   derivative Prony")
for N in range(1, 13):
    e1 = closed_form_error(target, approximate(target, N))
    lam, gam = prony_approximate(sigma, N)
    e3 = weighted_error_exponential_sum(target, lam, gam)
    print(f"{N:2d}   {e1:18.6e}   {e3:16.6e}")

lam, gam = prony_approximate(sigma, 6)
print()
print("N = 6 Prony frequencies (note the stray real parts):")
for v in np.sort_complex(lam):
    print(f"  {v.real:+.3e} {v.imag:+.6f}i")
