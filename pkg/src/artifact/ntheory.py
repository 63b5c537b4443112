"""Small rational number theory helpers: sieves, factorization, roots of unity mod p."""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def prime_sieve(n: int) -> np.ndarray:
    """Return all primes <= n as an int64 array."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    is_p = np.ones(n + 1, dtype=bool)
    is_p[:2] = False
    is_p[4::2] = False
    for i in range(3, int(n**0.5) + 1, 2):
        if is_p[i]:
            is_p[i * i :: 2 * i] = False
    return np.flatnonzero(is_p).astype(np.int64)


def primes_up_to(n: int) -> list[int]:
    return prime_sieve(n).tolist()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; fine for the sizes used here (n < 1e12)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def radical(n: int) -> int:
    r = 1
    for p in factorize(n):
        r *= p
    return r


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Least primitive root modulo an odd prime p."""
    if p == 2:
        return 1
    qs = list(factorize(p - 1))
    g = 2
    while True:
        if all(pow(g, (p - 1) // r, p) != 1 for r in qs):
            return g
        g += 1


def root_of_unity_mod(p: int, d: int) -> int:
    """An element of exact order d in F_p^* (requires d | p - 1)."""
    if (p - 1) % d:
        raise ValueError(f"{d} does not divide {p} - 1")
    g = primitive_root(p)
    return pow(g, (p - 1) // d, p)


def smallest_prime_factors(n: int) -> np.ndarray:
    spf = np.zeros(n + 1, dtype=np.int64)
    for p in prime_sieve(int(n**0.5) + 1).tolist():
        block = spf[p * p :: p]
        block[block == 0] = p
    idx = np.arange(n + 1, dtype=np.int64)
    spf[spf == 0] = idx[spf == 0]
    return spf
