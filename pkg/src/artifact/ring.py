"""Exact arithmetic in the Eisenstein integers Z[w] and the Gaussian integers Z[i].

Elements are stored as integer coordinates ``(a, b)`` in the basis ``{1, w}``
(resp. ``{1, i}``); nothing in this module touches floating point except
``to_complex``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Literal, Union

from .errors import BothZero, NotCoprimeToRamified, NotSplitPrime
from .ntheory import is_prime, root_of_unity_mod

Family = Literal["cubic", "quartic"]
FAMILIES: tuple[str, ...] = ("cubic", "quartic")


def _round_div(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0); ties go toward zero."""
    q, r = divmod(num, den)
    twice = 2 * r
    if twice > den:
        return q + 1
    if twice == den:
        # q and q + 1 are equally near; pick the one closer to zero
        return q + 1 if num < 0 else q
    return q


class _QuadInt:
    __slots__ = ("a", "b")

    # overridden per ring
    UNIT_COORDS: ClassVar[tuple[tuple[int, int], ...]] = ()
    RAMIFIED_NORM: ClassVar[int] = 0
    PRIMARY_MODULUS: ClassVar[tuple[int, int]] = (1, 0)
    ORDER: ClassVar[int] = 0
    FAMILY: ClassVar[str] = ""

    def __init__(self, a: int = 0, b: int = 0):
        object.__setattr__(self, "a", int(a))
        object.__setattr__(self, "b", int(b))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # ring structure, per subclass
    @staticmethod
    def _mul(a: int, b: int, c: int, d: int) -> tuple[int, int]:
        raise NotImplementedError

    def norm(self) -> int:
        raise NotImplementedError

    def conj(self):
        raise NotImplementedError

    def to_complex(self) -> complex:
        raise NotImplementedError

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, cls):
            return other
        if isinstance(other, int):
            return cls(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return type(self)(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return type(self)(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return type(self)(*self._mul(self.a, self.b, other.a, other.b))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not ring elements")
        result = type(self)(1, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((type(self).__name__, self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"{type(self).__name__}({self.a}, {self.b})"

    def divmod(self, other):
        """Euclidean division ``self = q*other + r`` with N(r) < N(other)."""
        other = self._coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in ring")
        z = self * other.conj()
        q = type(self)(_round_div(z.a, n), _round_div(z.b, n))
        return q, self - q * other

    def divides(self, other) -> bool:
        """True when ``self`` divides ``other``."""
        other = self._coerce(other)
        n = self.norm()
        if n == 0:
            return not other
        z = other * self.conj()
        return z.a % n == 0 and z.b % n == 0

    def exact_div(self, other):
        other = self._coerce(other)
        n = other.norm()
        z = self * other.conj()
        if z.a % n or z.b % n:
            raise ValueError(f"{other!r} does not divide {self!r}")
        return type(self)(z.a // n, z.b // n)

    @classmethod
    def units(cls) -> list:
        return [cls(a, b) for a, b in cls.UNIT_COORDS]

    def is_unit(self) -> bool:
        return self.norm() == 1

    def associates(self) -> list:
        return [u * self for u in self.units()]

    def is_primary(self) -> bool:
        m = type(self)(*self.PRIMARY_MODULUS)
        return m.divides(self - 1)

    def coprime_to_ramified(self) -> bool:
        return self.norm() % self.RAMIFIED_NORM != 0

    def canonical_associate(self):
        """Deterministic associate: the lexicographically largest (a, b)."""
        return max(self.associates(), key=lambda y: (y.a, y.b))


class EisensteinInt(_QuadInt):
    """a + b*w with w = exp(2*pi*i/3), w^2 = -1 - w."""

    __slots__ = ()
    # 1, w, w^2 = -1 - w and their negatives
    UNIT_COORDS = ((1, 0), (0, 1), (-1, -1), (-1, 0), (0, -1), (1, 1))
    RAMIFIED_NORM = 3
    PRIMARY_MODULUS = (3, 0)
    ORDER = 3
    FAMILY = "cubic"

    @staticmethod
    def _mul(a, b, c, d):
        bd = b * d
        return a * c - bd, a * d + b * c - bd

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def conj(self):
        return EisensteinInt(self.a - self.b, -self.b)

    def to_complex(self) -> complex:
        return complex(self.a - 0.5 * self.b, self.b * 0.8660254037844386)


class GaussianInt(_QuadInt):
    """a + b*i."""

    __slots__ = ()
    UNIT_COORDS = ((1, 0), (0, 1), (-1, 0), (0, -1))
    RAMIFIED_NORM = 2
    # (1 + i)^3 = -2 + 2i
    PRIMARY_MODULUS = (-2, 2)
    ORDER = 4
    FAMILY = "quartic"

    @staticmethod
    def _mul(a, b, c, d):
        return a * c - b * d, a * d + b * c

    def norm(self) -> int:
        return self.a * self.a + self.b * self.b

    def conj(self):
        return GaussianInt(self.a, -self.b)

    def to_complex(self) -> complex:
        return complex(self.a, self.b)


RingInt = Union[EisensteinInt, GaussianInt]

RING = {"cubic": EisensteinInt, "quartic": GaussianInt}
ORDER = {"cubic": 3, "quartic": 4}
RAMIFIED_PRIME = {"cubic": 3, "quartic": 2}
# |D_K|
DISCRIMINANT = {"cubic": 3, "quartic": 4}


def check_family(family: str) -> str:
    if family not in RING:
        raise ValueError(f"unknown family {family!r}; expected 'cubic' or 'quartic'")
    return family


def norm(x: RingInt) -> int:
    return x.norm()


def splitting_type(family: str, p: int) -> str:
    """'ramified', 'split' or 'inert' for a rational prime p in O_K."""
    d = ORDER[check_family(family)]
    if p == RAMIFIED_PRIME[family]:
        return "ramified"
    return "split" if p % (3 if d == 3 else 4) == 1 else "inert"


def primary_normalize(x: RingInt):
    """Return ``(u, y)`` with ``y = u*x`` the unique primary associate of x."""
    if not x or not x.coprime_to_ramified():
        raise NotCoprimeToRamified(f"{x!r} is not coprime to the ramified prime")
    for u in x.units():
        y = u * x
        if y.is_primary():
            return u, y
    raise AssertionError(f"no primary associate found for {x!r}")  # pragma: no cover


def gcd_k(x: RingInt, y: RingInt):
    """Greatest common divisor by the Euclidean algorithm with nearest rounding.

    The result is primary when coprime to the ramified prime (so units come
    back as 1); otherwise the canonical associate is returned.
    """
    if not x and not y:
        raise BothZero("gcd of two zeros is undefined")
    while y:
        _, r = x.divmod(y)
        x, y = y, r
    if x.coprime_to_ramified():
        return primary_normalize(x)[1]
    return x.canonical_associate()


@dataclass(frozen=True)
class KPrime:
    """A primary prime of O_K above a split rational prime p.

    ``omega_image`` is the residue r in [0, p) with w = r (resp. i = r) in
    O_K/(generator) = F_p.
    """

    family: str
    generator: RingInt
    p: int
    omega_image: int

    @property
    def order(self) -> int:
        return ORDER[self.family]

    def conjugate(self) -> "KPrime":
        p, r = self.p, self.omega_image
        image = r * r % p if self.family == "cubic" else (-r) % p
        return KPrime(self.family, self.generator.conj(), p, image)

    def key(self) -> tuple[int, int]:
        return (self.generator.a, self.generator.b)

    def is_valid(self) -> bool:
        g, p, r = self.generator, self.p, self.omega_image
        if g.norm() != p or not is_prime(p) or not g.is_primary():
            return False
        if self.family == "cubic":
            if p % 3 != 1 or r == 1 or pow(r, 3, p) != 1:
                return False
            w = EisensteinInt(0, 1)
        else:
            if p % 4 != 1 or (r * r + 1) % p:
                return False
            w = GaussianInt(0, 1)
        return g.divides(w - r)


def split_prime(p: int, family: str) -> tuple[KPrime, KPrime]:
    """The two conjugate primary primes above a split rational prime.

    Solves the norm equation by a Euclidean gcd of p with (w - r), where r is
    a primitive cube (resp. fourth) root of unity mod p; the prime found
    then satisfies w = r modulo it by construction.
    """
    check_family(family)
    d = ORDER[family]
    if p < 2 or not is_prime(p) or p % d != 1:
        raise NotSplitPrime(f"{p} does not split in the {family} ring")
    ring = RING[family]
    r = root_of_unity_mod(p, d)
    pi = gcd_k(ring(p, 0), ring(-r, 1))
    if pi.norm() != p:  # pragma: no cover - guarded by theory
        raise AssertionError(f"norm equation failed at p={p}")
    first = KPrime(family, pi, p, r)
    second = first.conjugate()
    if second.key() < first.key():
        first, second = second, first
    return first, second
