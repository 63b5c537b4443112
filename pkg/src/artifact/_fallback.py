"""Pure-Python implementations of the hot kernels.

Same signatures and semantics as the compiled ``_core`` module; used when the
extension is not built or when ``ARTIFACT_BACKEND=python`` is set.
"""

from __future__ import annotations

import math

import numpy as np

EPS = 1e-16
FPMIN = 1e-300
MAX_ITER = 10_000


def gammaincc(c: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(c, x) = Gamma(c, x)/Gamma(c), c > 0."""
    if x < 0 or c <= 0:
        raise ValueError("gammaincc needs c > 0 and x >= 0")
    if x == 0:
        return 1.0
    log_pref = -x + c * math.log(x) - math.lgamma(c)
    if x < c + 1.0:
        ap = c
        term = total = 1.0 / c
        for _ in range(MAX_ITER):
            ap += 1.0
            term *= x / ap
            total += term
            if abs(term) < abs(total) * EPS:
                break
        return 1.0 - total * math.exp(log_pref)
    # modified Lentz continued fraction
    b = x + 1.0 - c
    cc = 1.0 / FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, MAX_ITER):
        an = -i * (i - c)
        b += 2.0
        d = an * d + b
        if abs(d) < FPMIN:
            d = FPMIN
        cc = b + an / cc
        if abs(cc) < FPMIN:
            cc = FPMIN
        d = 1.0 / d
        delta = d * cc
        h *= delta
        if abs(delta - 1.0) < EPS:
            break
    return math.exp(log_pref) * h


def v_weights(c: float, A: float, M: int) -> np.ndarray:
    """w[m] = m^(-1/2) Q(c, pi m^2 / A^2) for 1 <= m <= M; w[0] = 0."""
    out = np.zeros(M + 1, dtype=np.float64)
    scale = math.pi / (A * A)
    for m in range(1, M + 1):
        out[m] = gammaincc(c, scale * m * m) / math.sqrt(m)
    return out


def char_exponents(primes, images, d: int, M: int) -> np.ndarray:
    """Exponent of chi(m) for 0 <= m <= M, -1 where gcd(m, q) > 1.

    chi is the product over the given primes p (with w/i images r) of the
    symbols m -> r^j, m^((p-1)/d) = r^j mod p. Built multiplicatively from
    the prime values through a smallest-prime-factor sieve.
    """
    primes = [int(p) for p in primes]
    images = [int(r) for r in images]
    tables = [{pow(r, j, p): j for j in range(d)} for p, r in zip(primes, images)]
    out = np.zeros(M + 1, dtype=np.int8)
    if M >= 0:
        out[0] = -1 if primes else 0
    spf = list(range(M + 1))
    i = 2
    while i * i <= M:
        if spf[i] == i:
            for j in range(i * i, M + 1, i):
                if spf[j] == j:
                    spf[j] = i
        i += 1
    for m in range(2, M + 1):
        s = spf[m]
        if s == m:
            e = 0
            for p, tab in zip(primes, tables):
                if m % p == 0:
                    e = -1
                    break
                e += tab[pow(m, (p - 1) // d, p)]
            out[m] = e % d if e >= 0 else -1
        else:
            a, b = out[s], out[m // s]
            out[m] = -1 if a < 0 or b < 0 else (a + b) % d
    return out


def weight_buckets(exps: np.ndarray, weights: np.ndarray, d: int) -> np.ndarray:
    """W[j] = sum of weights[m] over 1 <= m < len(weights) with exps[m] == j."""
    n = min(len(exps), len(weights))
    buckets: list[list[float]] = [[] for _ in range(d)]
    for m in range(1, n):
        j = int(exps[m])
        if j >= 0:
            buckets[j].append(float(weights[m]))
    return np.array([math.fsum(b) for b in buckets], dtype=np.float64)


def gauss_periods(p: int, g: int, d: int) -> np.ndarray:
    """S[j] = sum over k = j mod d of exp(2 pi i g^k / p), 0 <= k < p - 1."""
    re: list[list[float]] = [[] for _ in range(d)]
    im: list[list[float]] = [[] for _ in range(d)]
    x = 1
    two_pi_over_p = 2.0 * math.pi / p
    for k in range(p - 1):
        theta = two_pi_over_p * x
        re[k % d].append(math.cos(theta))
        im[k % d].append(math.sin(theta))
        x = x * g % p
    return np.array([complex(math.fsum(re[j]), math.fsum(im[j])) for j in range(d)])
