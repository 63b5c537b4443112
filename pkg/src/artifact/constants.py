"""Arithmetic constants in the first-moment main terms.

g(c), the residue r_K, zeta_K(2), c_K, the truncated series Z_K(u, l), and
the smooth weight Phi with its Mellin transform. Each constant has two
evaluation routes so they can be checked against each other.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate, special

from .errors import DivergentParameter, QuadratureNonConvergence
from .ntheory import factorize, prime_sieve
from .ring import DISCRIMINANT, RAMIFIED_PRIME, check_family, splitting_type
from .special import dirichlet_l_real, hurwitz_zeta, kronecker_symbol_neg

EULER_CUTOFF = 10**6
QUAD_TOL = 1e-10

PLATEAU = (1.25, 1.75)


# ------------------------------------------------------------------ g(c)


def _norms_above(family: str, p: int) -> tuple[int, ...]:
    kind = splitting_type(family, p)
    if kind == "split":
        return (p, p)
    if kind == "inert":
        return (p * p,)
    return (p,)


def local_g_factor(family: str, p: int) -> float:
    """The contribution of one rational prime p | c to g(c)."""
    norms = _norms_above(family, p)
    first = 1.0
    inner = 1.0
    for n in norms:
        first /= 1 + 1 / n
        inner /= 1 - n**-2.0
    return first / (1 - inner / (p * p))


def g_factor(family: str, c: int) -> float:
    """g(c) exactly as printed: product over K-primes and rational primes dividing c."""
    check_family(family)
    if c < 1:
        raise ValueError("g is defined for c >= 1")
    out = 1.0
    for p in sorted(factorize(c)):
        out *= local_g_factor(family, p)
    return out


@lru_cache(maxsize=None)
def g_sup(family: str) -> float:
    """An upper bound for g over all positive integers.

    Only inert primes give local factors above 1, and those are
    (1 - x)/(1 - x - x^2) with x = p^-2; the product over p > P is bounded
    through log(1 + y) <= y.
    """
    P = 10**4
    logs = []
    for p in prime_sieve(P).tolist():
        f = local_g_factor(family, p)
        if f > 1:
            logs.append(math.log(f))
    # x^2/(1 - x - x^2) <= 1.1 p^-4 for p > P, summed over all n > P
    tail = 1.1 / (3 * P**3)
    return math.exp(math.fsum(logs) + tail) * (1 + 1e-15)


# ------------------------------------------------------------------ r_K


def residue_rK(family: str) -> float:
    """Residue of zeta_K at 1, which is L(1, chi_{D_K}) (class number one, w = 6 or 4)."""
    check_family(family)
    return math.pi / (3 * math.sqrt(3)) if family == "cubic" else math.pi / 4


def residue_rK_digamma(family: str) -> float:
    """Second route: L(1, chi) = -(1/D) sum_a chi(a) psi(a/D) for a real odd character."""
    D = DISCRIMINANT[check_family(family)]
    terms = [kronecker_symbol_neg(D, a) * float(special.digamma(a / D)) for a in range(1, D)]
    return -math.fsum(terms) / D


# ------------------------------------------------------------------ zeta_K(2)


def zeta_K_at_2(family: str) -> float:
    """zeta(2) L(2, chi_{D_K}) from Hurwitz values."""
    D = DISCRIMINANT[check_family(family)]
    L2, _ = dirichlet_l_real(D, 2.0)
    return math.pi**2 / 6 * L2


@lru_cache(maxsize=None)
def _primes(P: int) -> np.ndarray:
    return prime_sieve(P).astype(np.float64)


@lru_cache(maxsize=None)
def prime_zeta_2() -> float:
    """P(2) = sum_p p^-2 = sum_n mu(n)/n log zeta(2n)."""
    terms = []
    for n in range(1, 60):
        f = factorize(n) if n > 1 else {}
        if any(e > 1 for e in f.values()):
            continue
        mu = -1 if len(f) % 2 else 1
        z, _ = hurwitz_zeta(2.0 * n, 1.0)
        terms.append(mu * math.log(z) / n)
    return math.fsum(terms)


def _prime_tail_2(P: int) -> float:
    """sum_{p > P} p^-2."""
    ps = _primes(P)
    return prime_zeta_2() - math.fsum((ps**-2.0).tolist())


def zeta_K_at_2_euler(family: str, P: int = EULER_CUTOFF) -> float:
    """Euler product over p <= P; the p^-2 part of the tail is restored via P(2)."""
    D = DISCRIMINANT[check_family(family)]
    ps = _primes(P)
    chi = np.array([kronecker_symbol_neg(D, int(p)) for p in ps.tolist()], dtype=np.float64)
    x = ps**-2.0
    logs = -np.log1p(-x) - np.log1p(-chi * x)
    return math.exp(math.fsum(logs.tolist()) + _prime_tail_2(P))


# ------------------------------------------------------------------ c_K


def _local_c_factor(family: str, p: int) -> float:
    inner = 1.0
    for n in _norms_above(family, p):
        inner /= 1 - n**-2.0
    return 1 - inner / (p * p)


def c_K_constant(family: str, P: int = 10**4) -> tuple[float, float]:
    """(c_K, error bound): the printed product, accelerated.

    prod_{(p, D) = 1} (1 - p^-2) = 1/(zeta(2)(1 - p_ram^-2)) is factored out,
    leaving local factors 1 + O(p^-4): at most 3 p^-4 in size for p >= 5,
    so truncation at P costs at most P^-3 in the logarithm.
    """
    check_family(family)
    ram = RAMIFIED_PRIME[family]
    logs = []
    for p in prime_sieve(P).tolist():
        if p == ram:
            continue
        x = 1 / (p * p)
        logs.append(math.log(_local_c_factor(family, p) / (1 - x)))
    rational = 1 / (math.pi**2 / 6 * (1 - ram**-2.0))
    value = residue_rK(family) / zeta_K_at_2(family) * rational * math.exp(math.fsum(logs))
    err = value * (math.expm1(1.0 / P**3) + 1e-14)
    return value, err


def c_K_direct(family: str, P: int = EULER_CUTOFF) -> float:
    """Second route: the unaccelerated product to P with a prime-zeta tail correction."""
    check_family(family)
    ram = RAMIFIED_PRIME[family]
    ps = prime_sieve(P)
    ps = ps[ps != ram].astype(np.float64)
    x = ps**-2.0
    D = DISCRIMINANT[family]
    split = np.array([kronecker_symbol_neg(D, int(p)) == 1 for p in ps.tolist()])
    inner = np.where(split, (1 - x) ** -2.0, 1 / (1 - x * x))
    logs = np.log1p(-x * inner)
    # beyond P the factors are 1 - p^-2 + O(p^-4)
    total = math.fsum(logs.tolist()) - _prime_tail_2(P)
    return residue_rK(family) / zeta_K_at_2_euler(family, P) * math.exp(total)


# ------------------------------------------------------------------ Z_K


@lru_cache(maxsize=None)
def _g_table(family: str, M: int) -> np.ndarray:
    """g(n) for 0 <= n <= M (g is a product of per-prime factors)."""
    G = np.ones(M + 1, dtype=np.float64)
    for p in prime_sieve(M).tolist():
        G[p::p] *= local_g_factor(family, p)
    G.setflags(write=False)
    return G


@lru_cache(maxsize=256)
def Z_K_truncated(family: str, u: float, ell: int, M: int = 10**6) -> tuple[float, float]:
    """(sum_{m <= M} m^-u g(m/(m, |D_K| l)), bound on the omitted tail).

    The tail is bounded by sup g times the integral of t^-u from M.
    """
    check_family(family)
    if not u > 1:
        raise DivergentParameter(f"Z_K(u, l) needs u > 1, got {u}")
    if ell < 1 or M < 1:
        raise ValueError("l and M must be positive")
    m = np.arange(1, M + 1, dtype=np.int64)
    n = m // np.gcd(m, DISCRIMINANT[family] * ell)
    terms = m.astype(np.float64) ** (-u) * _g_table(family, M)[n]
    value = math.fsum(terms.tolist())
    tail = g_sup(family) * M ** (1 - u) / (u - 1)
    return value, tail


# ------------------------------------------------------------------ Phi


def _glue(t):
    """exp(-1/t) for t > 0, else 0."""
    t = np.asarray(t, dtype=np.float64)
    out = np.zeros_like(t)
    pos = t > 0
    out[pos] = np.exp(-1 / t[pos])
    return out


def _step(t):
    """Smooth step: 0 for t <= 0, 1 for t >= 1, and step(t) + step(1 - t) = 1."""
    a = _glue(t)
    return a / (a + _glue(1 - np.asarray(t, dtype=np.float64)))


@dataclass(frozen=True)
class SmoothWeight:
    """Phi: support [1, 2], equal to 1 on the plateau, smooth exp(-1/t) ramps."""

    support: tuple[float, float] = (1.0, 2.0)
    plateau: tuple[float, float] = PLATEAU

    def __call__(self, x):
        lo, hi = self.support
        a, b = self.plateau
        x = np.asarray(x, dtype=np.float64)
        up = _step((x - lo) / (a - lo))
        down = _step((hi - x) / (hi - b))
        out = np.minimum(up, down)
        return float(out) if out.ndim == 0 else out

    def breakpoints(self) -> tuple[float, float, float, float]:
        return (self.support[0], self.plateau[0], self.plateau[1], self.support[1])


PHI = SmoothWeight()


def phi_weight(x):
    return PHI(x)


def _mellin_pieces():
    lo, a, b, hi = PHI.breakpoints()
    return [(math.log(lo), math.log(a)), (math.log(a), math.log(b)), (math.log(b), math.log(hi))]


def phi_hat(s: complex, tol: float = QUAD_TOL) -> complex:
    """Mellin transform int Phi(x) x^s dx/x by adaptive quadrature.

    With x = e^v this is int Phi(e^v) e^(sigma v) e^(i t v) dv over [0, log 2],
    integrated piecewise so the ramps and the plateau are separate panels.
    """
    s = complex(s)
    sigma, t = s.real, s.imag
    re, im = [], []
    err = 0.0

    def f(v):
        return PHI(math.exp(v)) * math.exp(sigma * v)

    opts = dict(epsabs=tol / 100, epsrel=1e-13, limit=1000)
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            for lo, hi in _mellin_pieces():
                r, e1 = integrate.quad(lambda v: f(v) * math.cos(t * v), lo, hi, **opts)
                re.append(r)
                err += e1
                if t != 0:
                    i, e2 = integrate.quad(lambda v: f(v) * math.sin(t * v), lo, hi, **opts)
                    im.append(i)
                    err += e2
        except integrate.IntegrationWarning as exc:
            raise QuadratureNonConvergence(f"phi_hat({s}): {exc}") from exc
    if err > tol:
        raise QuadratureNonConvergence(f"phi_hat({s}) error estimate {err:.2e} exceeds {tol:.0e}")
    return complex(math.fsum(re), math.fsum(im))


def phi_hat_gauss_legendre(s: complex, nodes: int = 48, panels: int = 64) -> complex:
    """Fixed composite Gauss-Legendre rule on the same three pieces."""
    s = complex(s)
    xg, wg = np.polynomial.legendre.leggauss(nodes)
    total = []
    for lo, hi in _mellin_pieces():
        edges = np.linspace(lo, hi, panels + 1)
        half = np.diff(edges) / 2
        mid = (edges[:-1] + edges[1:]) / 2
        v = (mid[:, None] + half[:, None] * xg[None, :]).ravel()
        w = (half[:, None] * wg[None, :]).ravel()
        total.append(np.sum(w * PHI(np.exp(v)) * np.exp(s * v)))
    return complex(math.fsum(z.real for z in total), math.fsum(z.imag for z in total))


# ------------------------------------------------------------------ table


@dataclass(frozen=True)
class EulerConstants:
    family: str
    r_K: float
    zeta_K2: float
    c_K: float
    phi_hat_1: float
    precision: float

    def to_dict(self) -> dict:
        return asdict(self)


@lru_cache(maxsize=None)
def euler_constants(family: str) -> EulerConstants:
    """Memoized constants; the precision field is a certified absolute bound for c_K."""
    check_family(family)
    c, c_err = c_K_constant(family)
    return EulerConstants(
        family=family,
        r_K=residue_rK(family),
        zeta_K2=zeta_K_at_2(family),
        c_K=c,
        phi_hat_1=phi_hat(1).real,
        precision=max(c_err, QUAD_TOL),
    )
