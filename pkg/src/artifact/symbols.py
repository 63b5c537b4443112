"""Cubic and quartic residue symbols at rational integers, kept as exact exponents.

A prime symbol (m/pi)_d is evaluated through O_K/(pi) = F_p: raise m to
(p-1)/d in F_p and match the result against powers of the image of w
(resp. i). No reciprocity law is involved.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .ring import KPrime


@dataclass(frozen=True)
class SymbolValue:
    """A d-th root of unity w^j (resp. i^j), or Zero when ``exponent`` is None."""

    order: int
    exponent: Optional[int]

    def __post_init__(self):
        if self.order not in (3, 4):
            raise ValueError(f"unsupported symbol order {self.order}")
        if self.exponent is not None and not 0 <= self.exponent < self.order:
            object.__setattr__(self, "exponent", self.exponent % self.order)

    @classmethod
    def one(cls, order: int) -> "SymbolValue":
        return cls(order, 0)

    @classmethod
    def zero(cls, order: int) -> "SymbolValue":
        return cls(order, None)

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __mul__(self, other: "SymbolValue") -> "SymbolValue":
        if self.order != other.order:
            raise ValueError("cannot multiply symbols of different order")
        if self.is_zero or other.is_zero:
            return SymbolValue.zero(self.order)
        return SymbolValue(self.order, (self.exponent + other.exponent) % self.order)

    def __pow__(self, e: int) -> "SymbolValue":
        if self.is_zero:
            if e <= 0:
                raise ZeroDivisionError("non-positive power of Zero")
            return self
        return SymbolValue(self.order, self.exponent * e % self.order)

    def conjugate(self) -> "SymbolValue":
        if self.is_zero:
            return self
        return SymbolValue(self.order, -self.exponent % self.order)

    def to_complex(self) -> complex:
        if self.is_zero:
            return 0j
        return root_of_unity(self.order, self.exponent)


@lru_cache(maxsize=None)
def root_of_unity(order: int, j: int) -> complex:
    j %= order
    if order == 4:
        return (1 + 0j, 1j, -1 + 0j, -1j)[j]
    if j == 0:
        return 1 + 0j
    return cmath.exp(2j * cmath.pi * j / order)


@lru_cache(maxsize=65536)
def _power_table(p: int, r: int, d: int) -> dict[int, int]:
    return {pow(r, j, p): j for j in range(d)}


def prime_exponent(m: int, pi: KPrime) -> Optional[int]:
    """Exponent j with (m/pi)_d = zeta^j, or None when p divides m."""
    p, d = pi.p, pi.order
    m %= p
    if m == 0:
        return None
    t = pow(m, (p - 1) // d, p)
    return _power_table(p, pi.omega_image, d)[t]


def prime_symbol(m: int, pi: KPrime) -> SymbolValue:
    return SymbolValue(pi.order, prime_exponent(m, pi))


def composite_symbol(m: int, factors: Iterable[tuple[KPrime, int]], order: Optional[int] = None) -> SymbolValue:
    """Multiplicative extension over a factored primary modulus.

    An empty factor list means the modulus is a unit and the symbol is 1;
    ``order`` must then be supplied.
    """
    factors = list(factors)
    if not factors:
        if order is None:
            raise ValueError("order is required for a unit modulus")
        return SymbolValue.one(order)
    d = factors[0][0].order
    total = 0
    for pi, mult in factors:
        j = prime_exponent(m, pi)
        if j is None:
            return SymbolValue.zero(d)
        total += j * mult
    return SymbolValue(d, total % d)
