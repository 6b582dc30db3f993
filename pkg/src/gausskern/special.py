"""Gamma, upper incomplete Gamma, double factorials and the terminating 2F1.

Only the parameter ranges needed by the pencil-matrix entries are supported:
positive (half-)integer Gamma arguments and a nonpositive-integer first
parameter for 2F1, which makes the hypergeometric series a finite sum.
"""

from __future__ import annotations

import math

__all__ = [
    "gamma_fn",
    "upper_incomplete_gamma",
    "hyp2f1_terminating",
    "double_factorial",
]


def double_factorial(k: int) -> float:
    """k!! as a float, with (-1)!! = 0!! = 1.  Overflows to inf near k ~ 300."""
    if k < -1:
        raise ValueError("k must be >= -1")
    out = 1.0
    while k > 1:
        out *= k
        k -= 2
    return out


def gamma_fn(z: float) -> float:
    """Gamma(z) for z > 0.

    Half-integers use the product Gamma(z) = (z-1)(z-2)...(1/2) Gamma(1/2),
    accumulated in the same order as the upward recurrence of
    upper_incomplete_gamma, so that Gamma(z) - Gamma(z, 0) cancels to exactly
    zero.  Everything else goes through math.gamma.
    """
    if z <= 0:
        raise ValueError("z must be positive")
    if z > 171:
        raise OverflowError("Gamma overflows double precision for z > 171")
    two_z = 2.0 * z
    if two_z == round(two_z) and round(two_z) % 2 == 1:
        val = math.sqrt(math.pi)
        zc = 0.5
        while zc < z - 0.25:
            val = zc * val
            zc += 1.0
        return val
    return math.gamma(z)


def upper_incomplete_gamma(z: float, a: float) -> float:
    """Gamma(z, a) = int_a^inf t^{z-1} e^{-t} dt for positive (half-)integer z.

    Seeded by Gamma(1, a) = e^{-a} and Gamma(1/2, a) = sqrt(pi)*erfc(sqrt(a)),
    then lifted by the upward recurrence Gamma(z+1, a) = z Gamma(z, a) + a^z e^{-a}.
    The recurrence is stable upward since every term is positive.
    """
    if a < 0:
        raise ValueError("a must be nonnegative")
    two_z = 2.0 * z
    if z <= 0 or two_z != round(two_z):
        raise ValueError("z must be a positive multiple of 1/2")
    half_steps = round(two_z)
    if half_steps % 2 == 0:
        val = math.exp(-a)  # Gamma(1, a)
        zc = 1.0
    else:
        val = math.sqrt(math.pi) * math.erfc(math.sqrt(a))  # Gamma(1/2, a)
        zc = 0.5
    while zc < z - 0.25:
        val = zc * val + a ** zc * math.exp(-a)
        zc += 1.0
    return val


def hyp2f1_terminating(m: int, j: int, z: float) -> float:
    """2F1(-m, -j; (1-m-j)/2; z) for j+m even: a finite sum of min(m,j)+1 terms.

    The third parameter is then a half-integer <= 1/2, never hitting a
    nonpositive integer before the series terminates, so no denominator
    Pochhammer vanishes.  Terms are built incrementally from rational
    factors; no factorial is ever formed.
    """
    if m < 0 or j < 0:
        raise ValueError("m and j must be nonnegative")
    if (m + j) % 2:
        raise ValueError("j + m must be even")
    c = (1 - m - j) / 2.0
    total = 1.0
    term = 1.0
    for n in range(min(m, j)):
        denom = c + n
        if denom == 0.0:
            raise ValueError("vanishing Pochhammer denominator")
        term *= (-m + n) * (-j + n) / (denom * (n + 1)) * z
        total += term
    return total
