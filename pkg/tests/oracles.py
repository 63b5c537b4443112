"""Independent reference implementations used only by the tests.

None of these share code with the package beyond the ring element classes.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

from artifact.ring import EisensteinInt, GaussianInt


def units_exponent_oracle(m: int, gen, p: int, d: int):
    """(m/pi)_d via m^((p-1)/d) reduced modulo pi in two coordinates.

    Returns j with m^((p-1)/d) = w^j (resp. i^j) mod pi, or None if pi | m.
    """
    ring = type(gen)
    if m % p == 0:
        return None
    base = ring(m % p, 0)
    e = (p - 1) // d
    acc = ring(1, 0)
    while e:
        if e & 1:
            acc = acc * base
            acc = acc.divmod(gen)[1]
        base = (base * base).divmod(gen)[1]
        e >>= 1
    zeta = ring(0, 1)
    power = ring(1, 0)
    for j in range(d):
        if gen.divides(acc - power):
            return j
        power = power * zeta
    raise AssertionError("no root of unity matched")


def brute_norm_solutions(p: int, family: str) -> set[tuple[int, int]]:
    ring = EisensteinInt if family == "cubic" else GaussianInt
    bound = int(2 * math.isqrt(p)) + 2
    out = set()
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if ring(a, b).norm() == p:
                out.add((a, b))
    return out


def _prime_power_factors(q: int) -> list[tuple[int, int]]:
    out, n, p = [], q, 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


@lru_cache(maxsize=None)
def _group(q: int):
    """Generators of (Z/q)^* with their orders and a discrete-log table.

    Odd prime powers use a primitive root (found by brute force) lifted by
    CRT; powers of 2 use -1 and 5.
    """
    gens = []
    for p, e in _prime_power_factors(q):
        pe = p**e
        rest = q // pe
        locs = []
        if p == 2:
            if e >= 2:
                locs.append((pe - 1, 2))
            if e >= 3:
                locs.append((5, pe // 4))
        else:
            phi = pe - pe // p
            g = next(
                g for g in range(2, pe) if math.gcd(g, p) == 1 and all(pow(g, phi // r, pe) != 1 for r, _ in _prime_power_factors(phi))
            )
            locs.append((g, phi))
        for g, order in locs:
            # lift to Z/q: g mod pe, 1 mod rest
            x = (g * rest * pow(rest, -1, pe) + pe * pow(pe, -1, rest)) % q if rest > 1 else g % q
            gens.append((x, order))
    # discrete logs by walking the product group
    logs = {1 % q: tuple(0 for _ in gens)}
    frontier = [(1 % q, tuple(0 for _ in gens))]
    for i, (g, order) in enumerate(gens):
        new = []
        for a, vec in frontier:
            x = a
            for t in range(1, order):
                x = x * g % q
                v = list(vec)
                v[i] = t
                new.append((x, tuple(v)))
                logs[x] = tuple(v)
        frontier += new
    return gens, logs


def _characters_of_order_dividing(q: int, d: int):
    gens, logs = _group(q)
    choices = []
    for _, order in gens:
        # chi(g) = zeta_d^k needs k*order = 0 mod d
        choices.append([k for k in range(d) if k * order % d == 0])
    out = [()]
    for c in choices:
        out = [o + (k,) for o in out for k in c]
    return gens, logs, out


def _is_primitive(ks, q, logs, d, gens) -> bool:
    for p, _ in _prime_power_factors(q):
        sub = q // p
        trivial = True
        for t in range(p):
            a = (1 + t * sub) % q
            if math.gcd(a, q) != 1:
                continue
            if _exp_at(ks, logs, a, d, gens) != 0:
                trivial = False
                break
        if trivial:
            return False
    return True


def _exp_at(ks, logs, a, d, gens) -> int:
    return sum(k * v for k, v in zip(ks, logs[a])) % d


def brute_family_count(q: int, family: str) -> int:
    """Primitive characters mod q of exact order 3 (cubic, 3 ∤ q) or of order 4
    with primitive square (quartic, q odd), by explicit construction."""
    d = 3 if family == "cubic" else 4
    if q == 1 or (family == "cubic" and q % 3 == 0) or (family == "quartic" and q % 2 == 0):
        return 0
    gens, logs, chars = _characters_of_order_dividing(q, d)
    count = 0
    for ks in chars:
        if all(k == 0 for k in ks):
            continue
        if not _is_primitive(ks, q, logs, d, gens):
            continue
        if d == 4:
            sq = tuple(2 * k % d for k in ks)
            if all(k == 0 for k in sq) or not _is_primitive(sq, q, logs, d, gens):
                continue
        count += 1
    return count


def gauss_sum_oracle(values, q: int) -> complex:
    return sum(v * cmath.exp(2j * math.pi * a / q) for a, v in enumerate(values))
