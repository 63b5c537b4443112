"""Central values L(1/2, chi) by the approximate functional equation and a Hurwitz oracle.

With the test function G = 1 the AFE weight has the closed form
V_a(x) = Q((1/2 + a)/2, pi x^2), the regularized upper incomplete gamma
function, so no contour integral is evaluated at run time.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels
from .characters import CharKey, PrimitiveCharacter, _periods, root_number
from .errors import ConductorTooLargeForOracle, NonPositiveArgument
from .special import hurwitz_zeta
from .symbols import root_of_unity

AFE_TOLERANCE = 1e-10
DIRECT_CAP = 5000


@dataclass(frozen=True)
class WeightKernel:
    """V_a for parity a, with G identically 1."""

    parity: int

    @property
    def shape(self) -> float:
        return (0.5 + self.parity) / 2

    def __call__(self, x: float) -> float:
        return v_weight(self.parity, x)


@dataclass(frozen=True)
class LValueRecord:
    family: str
    q: int
    gen_a: int
    gen_b: int
    value: complex
    method: str
    truncation_error: float
    split_A: float = float("nan")

    @property
    def key(self) -> CharKey:
        return (self.family, self.q, self.gen_a, self.gen_b)


def v_weight(parity: int, x: float) -> float:
    if not x > 0:
        raise NonPositiveArgument(f"V is defined for x > 0, got {x}")
    c = (0.5 + parity) / 2
    return _kernels.gammaincc(c, math.pi * x * x)


def tail_bound(c: float, A: float, M: int) -> float:
    """Upper bound for sum_{m > M} m^(-1/2) Q(c, pi m^2/A^2), valid for 0 < c < 1.

    Uses Gamma(c, y) <= y^(c-1) e^(-y) and compares the decreasing sum with
    its integral from M.
    """
    y = math.pi * M * M / (A * A)
    return M**-0.5 * y ** (c - 1) * math.exp(-y) / math.gamma(c) * A * A / (2 * math.pi * M)


def cutoff(c: float, A: float, eps: float) -> int:
    """Least M >= 1 with tail_bound(c, A, M) <= eps."""
    hi = max(1, math.ceil(A * math.sqrt((c + math.log(1 / eps)) / math.pi)))
    while tail_bound(c, A, hi) > eps:
        hi *= 2
    lo = 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid >= 1 and tail_bound(c, A, mid) <= eps:
            hi = mid
        else:
            lo = mid
    return hi


@lru_cache(maxsize=4096)
def _weights(c: float, A: float, M: int) -> np.ndarray:
    w = _kernels.v_weights(c, A, M)
    w.setflags(write=False)
    return w


def _rotate(buckets: np.ndarray, d: int, sign: int) -> complex:
    re = math.fsum(root_of_unity(d, sign * j).real * float(buckets[j]) for j in range(d))
    im = math.fsum(root_of_unity(d, sign * j).imag * float(buckets[j]) for j in range(d))
    return complex(re, im)


def afe_central_value(
    chi: PrimitiveCharacter,
    A: Optional[float] = None,
    eps: float = AFE_TOLERANCE,
    M_scale: float = 1.0,
) -> LValueRecord:
    """L(1/2, chi) = sum chi(m) m^-1/2 V(m/A) + eps(chi) sum conj chi(m) m^-1/2 V(m/B), AB = q.

    Both sums are cut where the incomplete-gamma tail bound drops below
    eps/2; ``M_scale`` stretches the cutoffs (used to audit the bound).
    """
    q, d = chi.q, chi.order
    A = math.sqrt(q) if A is None else float(A)
    if not A > 0:
        raise NonPositiveArgument("split parameter A must be positive")
    B = q / A
    c = (0.5 + chi.parity) / 2
    M_A = math.ceil(cutoff(c, A, eps / 2) * M_scale)
    M_B = math.ceil(cutoff(c, B, eps / 2) * M_scale)
    exps = chi.exponent_table(max(M_A, M_B))
    W_A = _kernels.weight_buckets(exps, _weights(c, A, M_A), d)
    W_B = _kernels.weight_buckets(exps, _weights(c, B, M_B), d)
    value = _rotate(W_A, d, 1) + root_number(chi) * _rotate(W_B, d, -1)
    err = tail_bound(c, A, M_A) + tail_bound(c, B, M_B)
    g = chi.generator
    return LValueRecord(chi.family, q, g.a, g.b, value, "afe", err, A)


@lru_cache(maxsize=64)
def _hurwitz_half(q: int) -> tuple[np.ndarray, np.ndarray]:
    return hurwitz_zeta(0.5, np.arange(1, q + 1) / q)


def direct_central_value(chi: PrimitiveCharacter, cap: int = DIRECT_CAP) -> LValueRecord:
    """Oracle: q^(-1/2) sum_{a <= q} chi(a) zeta(1/2, a/q), O(q) Hurwitz values."""
    q, d = chi.q, chi.order
    if q > cap:
        raise ConductorTooLargeForOracle(f"q = {q} exceeds the direct-oracle cap {cap}")
    zs, bounds = _hurwitz_half(q)
    exps = chi.exponent_table(q)
    re, im = [], []
    err = 0.0
    for a in range(1, q + 1):
        j = int(exps[a])
        if j < 0:
            continue
        z = root_of_unity(d, j) * float(zs[a - 1])
        re.append(z.real)
        im.append(z.imag)
        err += float(bounds[a - 1])
    scale = q**-0.5
    value = complex(math.fsum(re), math.fsum(im)) * scale
    g = chi.generator
    return LValueRecord(chi.family, q, g.a, g.b, value, "direct", err * scale, float("nan"))


def _warm_periods(chars: Iterable[PrimitiveCharacter]) -> None:
    for pi in {pi for chi in chars for pi in chi.factors}:
        _periods(pi.p, pi.order)


def central_values(
    chars: Sequence[PrimitiveCharacter],
    method: str = "afe",
    threads: Optional[int] = None,
    split_exponent: float = 0.5,
) -> list[LValueRecord]:
    """Records for ``chars`` in input order.

    Work is spread over a thread pool (the compiled kernels release the
    GIL); each character is computed single-threaded, so values do not
    depend on the thread count.
    """
    chars = list(chars)
    if method == "afe":
        _warm_periods(chars)

        def one(chi):
            A = None if split_exponent == 0.5 else chi.q**split_exponent
            return afe_central_value(chi, A)

    elif method == "direct":
        one = direct_central_value
    else:
        raise ValueError(f"unknown method {method!r}")
    threads = threads or 1
    if threads <= 1 or len(chars) < 2:
        return [one(chi) for chi in chars]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(one, chars, chunksize=64))
