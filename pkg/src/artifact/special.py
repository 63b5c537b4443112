"""Hurwitz zeta by Euler-Maclaurin, Bernoulli numbers, and small Dirichlet L-series."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import _kernels


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2 (Akiyama-Tanigawa)."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    b = a[0]
    return -b if n == 1 else b


@lru_cache(maxsize=None)
def _em_coefficients(J: int) -> tuple[float, ...]:
    return tuple(float(bernoulli(2 * j) / math.factorial(2 * j)) for j in range(1, J + 2))


def hurwitz_zeta(s: float, a, N: int = 20, J: int = 12):
    """zeta(s, a) for real s != 1 (s > 0 for the error bound) and a > 0.

    Returns ``(value, bound)``. ``bound`` is the first omitted
    Euler-Maclaurin term plus a rounding allowance; for s > 0 the summand
    (x + a)^(-s) is completely monotone, so the remainder is bounded by that
    term. ``a`` may be a scalar or an array.
    """
    if s == 1:
        raise ValueError("pole at s = 1")
    a = np.asarray(a, dtype=np.float64)
    if np.any(a <= 0):
        raise ValueError("Hurwitz parameter must be positive")
    k = np.arange(N, dtype=np.float64)
    head_terms = (k[:, None] + a.reshape(1, -1)) ** (-s)
    head = np.array([math.fsum(col) for col in head_terms.T])
    x = N + a.reshape(-1)
    total = head + x ** (1 - s) / (s - 1) + 0.5 * x ** (-s)
    coeffs = _em_coefficients(J)
    rising = s  # s (s+1) ... (s+2j-2)
    xp = x ** (-s - 1)
    tail = np.zeros_like(x)
    for j in range(1, J + 1):
        tail += coeffs[j - 1] * rising * xp
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        xp = xp / (x * x)
    bound = np.abs(coeffs[J] * rising * xp)
    # floating-point rounding of the head and the integral term
    bound = bound + 8 * 2.2e-16 * (np.abs(head) + np.abs(x ** (1 - s) / (s - 1)) + 1.0)
    total = total + tail
    if total.size == 1 and np.ndim(a) == 0:
        return float(total[0]), float(bound[0])
    return total.reshape(a.shape), bound.reshape(a.shape)


def kronecker_symbol_neg(D: int, n: int) -> int:
    """The real character chi_{-3} or chi_{-4} at n."""
    if D == 3:
        return (0, 1, -1)[n % 3]
    if D == 4:
        return (0, 1, 0, -1)[n % 4]
    raise ValueError("only |D| in {3, 4}")


def dirichlet_l_real(D: int, s: float) -> tuple[float, float]:
    """L(s, chi_{-D}) for D in {3, 4}, s > 1, as D^-s sum_a chi(a) zeta(s, a/D)."""
    vals, bounds = hurwitz_zeta(s, np.arange(1, D) / D)
    chis = [kronecker_symbol_neg(D, a) for a in range(1, D)]
    value = D ** (-s) * math.fsum(c * v for c, v in zip(chis, vals.tolist()))
    return value, D ** (-s) * float(np.sum(bounds)) + 4e-16 * abs(value)


def gammaincc(c: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(c, x)."""
    return _kernels.gammaincc(c, x)
