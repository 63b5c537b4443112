"""The primitive cubic and quartic character families, with Gauss sums and root numbers.

Each member is chi_n : m -> (m/n)_d for a primary, square-free n with no
rational prime divisor. Members are built from their factorization: one
conjugate prime above each split rational prime dividing the conductor.
"""

from __future__ import annotations

import cmath
import csv
import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Iterator, Optional

import numpy as np

from . import _kernels
from .errors import InvalidCharacterValue
from .ntheory import primes_up_to, primitive_root
from .ring import ORDER, RING, KPrime, RingInt, check_family, split_prime
from .symbols import SymbolValue, prime_exponent, root_of_unity

CharKey = tuple  # (family, q, gen_a, gen_b)

FAMILY_CSV_COLUMNS = ("family", "q", "gen_a", "gen_b", "parity")


@dataclass(frozen=True)
class PrimitiveCharacter:
    family: str
    q: int
    generator: RingInt
    factors: tuple[KPrime, ...]
    parity: int = field(compare=False)

    @property
    def order(self) -> int:
        return ORDER[self.family]

    @property
    def key(self) -> CharKey:
        return (self.family, self.q, self.generator.a, self.generator.b)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(pi.p for pi in self.factors)

    def exponent(self, m: int) -> Optional[int]:
        """Exact value of chi(m) as an exponent j of zeta_d, None when chi(m) = 0."""
        total = 0
        for pi in self.factors:
            j = prime_exponent(m, pi)
            if j is None:
                return None
            total += j
        return total % self.order

    def symbol(self, m: int) -> SymbolValue:
        return SymbolValue(self.order, self.exponent(m))

    def __call__(self, m: int) -> complex:
        return eval_character(self, m)

    def conjugate(self) -> "PrimitiveCharacter":
        return PrimitiveCharacter(
            self.family,
            self.q,
            self.generator.conj(),
            tuple(pi.conjugate() for pi in self.factors),
            self.parity,
        )

    def exponent_table(self, M: int) -> np.ndarray:
        """int8 exponents of chi(m) for 0 <= m <= M (-1 marks chi(m) = 0)."""
        return _kernels.char_exponents(
            [pi.p for pi in self.factors], [pi.omega_image for pi in self.factors], self.order, M
        )


def eval_character(chi: PrimitiveCharacter, m: int) -> complex:
    j = chi.exponent(m)
    return 0j if j is None else root_of_unity(chi.order, j)


def parity(chi: PrimitiveCharacter) -> int:
    """The a in {0, 1} with chi(-1) = (-1)^a, computed from chi(-1)."""
    j = chi.exponent(-1)
    if j == 0:
        return 0
    if j is not None and 2 * j == chi.order:
        return 1
    raise InvalidCharacterValue(f"chi(-1) = zeta_{chi.order}^{j} is not +-1 for {chi.key}")


def _make_character(family: str, factors: tuple[KPrime, ...]) -> PrimitiveCharacter:
    ring = RING[family]
    gen = ring(1, 0)
    q = 1
    for pi in factors:
        gen = gen * pi.generator
        q *= pi.p
    chi = PrimitiveCharacter(family, q, gen, factors, 0)
    object.__setattr__(chi, "parity", parity(chi))
    return chi


def character_from_generator(family: str, n: RingInt) -> PrimitiveCharacter:
    """Rebuild a family member from its primary generator (factors via the ring)."""
    q = n.norm()
    from .ntheory import factorize

    factors = []
    for p, e in sorted(factorize(q).items()):
        if e != 1:
            raise ValueError(f"{n!r} is not square-free with split prime factors")
        a, b = split_prime(p, family)
        if a.generator.divides(n):
            factors.append(a)
        elif b.generator.divides(n):
            factors.append(b)
        else:  # pragma: no cover
            raise ValueError(f"no prime above {p} divides {n!r}")
    chi = _make_character(family, tuple(factors))
    if chi.generator != n:
        raise ValueError(f"{n!r} is not a primary family generator")
    return chi


@lru_cache(maxsize=None)
def _split_pairs(family: str, X: int) -> tuple[tuple[KPrime, KPrime], ...]:
    d = 3 if family == "cubic" else 4
    return tuple(split_prime(p, family) for p in primes_up_to(X) if p % d == 1)


@dataclass(frozen=True)
class FamilySlice:
    family: str
    X: int
    members: tuple[PrimitiveCharacter, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[PrimitiveCharacter]:
        return iter(self.members)

    def conductors(self) -> list[int]:
        return sorted({chi.q for chi in self.members})

    def by_conductor(self) -> dict[int, list[PrimitiveCharacter]]:
        out: dict[int, list[PrimitiveCharacter]] = {}
        for chi in self.members:
            out.setdefault(chi.q, []).append(chi)
        return out

    def restrict(self, qmin: int = 1, qmax: Optional[int] = None) -> "FamilySlice":
        """Members with qmin <= q <= qmax, order preserved."""
        qmax = self.X if qmax is None else qmax
        return FamilySlice(
            self.family, min(self.X, qmax), tuple(c for c in self.members if qmin <= c.q <= qmax)
        )

    def to_csv(self, path) -> None:
        write_family_csv(self, path)


def enumerate_family(family: str, X: int) -> FamilySlice:
    """All family members with conductor <= X, sorted by (q, gen_a, gen_b)."""
    check_family(family)
    if X < 1:
        raise ValueError("X must be >= 1")
    pairs = _split_pairs(family, int(X))
    members: list[PrimitiveCharacter] = []

    def extend(start: int, q: int, chosen: list[tuple[KPrime, KPrime]]):
        if chosen:
            for pick in product(*chosen):
                members.append(_make_character(family, tuple(pick)))
        for i in range(start, len(pairs)):
            p = pairs[i][0].p
            if q * p > X:
                break
            chosen.append(pairs[i])
            extend(i + 1, q * p, chosen)
            chosen.pop()

    extend(0, 1, [])
    members.sort(key=lambda c: (c.q, c.generator.a, c.generator.b))
    return FamilySlice(family, int(X), tuple(members))


@lru_cache(maxsize=None)
def family_slice(family: str, X: int) -> FamilySlice:
    """Memoized ``enumerate_family``; slices are immutable and shareable."""
    return enumerate_family(family, X)


def write_family_csv(fs: FamilySlice, path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(FAMILY_CSV_COLUMNS)
        for chi in fs.members:
            w.writerow((chi.family, chi.q, chi.generator.a, chi.generator.b, chi.parity))


def read_family_csv(path) -> list[tuple[str, int, int, int, int]]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [
        (r["family"], int(r["q"]), int(r["gen_a"]), int(r["gen_b"]), int(r["parity"])) for r in rows
    ]


# ---------------------------------------------------------------- Gauss sums


@lru_cache(maxsize=None)
def _periods(p: int, d: int) -> tuple[complex, ...]:
    return tuple(_kernels.gauss_periods(p, primitive_root(p), d).tolist())


def prime_gauss_sum(pi: KPrime) -> complex:
    """tau of the character m -> (m/pi)_d modulo p, from Gauss periods."""
    d = pi.order
    s = prime_exponent(primitive_root(pi.p), pi)
    periods = _periods(pi.p, d)
    re = math.fsum((root_of_unity(d, s * j) * periods[j]).real for j in range(d))
    im = math.fsum((root_of_unity(d, s * j) * periods[j]).imag for j in range(d))
    return complex(re, im)


def gauss_sum(chi: PrimitiveCharacter) -> complex:
    """tau(chi) by twisted multiplicativity over the prime factors."""
    d = chi.order
    tau = 1 + 0j
    q_done = 1
    done: list[KPrime] = []
    for pi in chi.factors:
        # tau(chi1 chi2) = chi1(q2) chi2(q1) tau(chi1) tau(chi2)
        e = prime_exponent(q_done, pi) if q_done > 1 else 0
        for prev in done:
            e += prime_exponent(pi.p, prev)
        tau = tau * root_of_unity(d, e) * prime_gauss_sum(pi)
        q_done *= pi.p
        done.append(pi)
    return tau


def gauss_sum_direct(chi: PrimitiveCharacter) -> complex:
    """O(q) oracle: sum over a mod q of chi(a) e(a/q)."""
    q, d = chi.q, chi.order
    exps = chi.exponent_table(q - 1)
    re, im = [], []
    for a in range(1, q):
        j = int(exps[a])
        if j < 0:
            continue
        z = root_of_unity(d, j) * cmath.exp(2j * math.pi * a / q)
        re.append(z.real)
        im.append(z.imag)
    return complex(math.fsum(re), math.fsum(im))


def root_number(chi: PrimitiveCharacter) -> complex:
    """epsilon(chi) = i^(-a) q^(-1/2) tau(chi)."""
    return (-1j) ** chi.parity * gauss_sum(chi) / math.sqrt(chi.q)
