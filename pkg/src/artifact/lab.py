"""Experiment harness: empirical family sums against the predicted main terms.

Central values enter as a mapping from character key to L(1/2, chi) (see
``cache.LValueCache.values``). Sums run over members in canonical order with
compensated summation, so reported numbers do not depend on how the values
were produced.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Callable, Mapping, Optional, Sequence, Union

import numpy as np
from scipy import optimize

from .cache import require_values
from .characters import CharKey, PrimitiveCharacter, family_slice
from .constants import Z_K_truncated, c_K_constant, euler_constants, g_factor, phi_hat, phi_weight
from .errors import EmptyLadder, MissingFamily, ZeroCentralValue
from .ntheory import factorize, prime_sieve
from .ring import ORDER, check_family
from .symbols import root_of_unity

Values = Mapping[CharKey, complex]

# the Z_K argument in the main term: 3/2 for the cubic family, 2 for the quartic one
Z_ARGUMENT = {"cubic": 1.5, "quartic": 2.0}
# g is evaluated at (this) * l
G_SHIFT = {"cubic": 3, "quartic": 2}


def _fsum_complex(zs) -> complex:
    zs = list(zs)
    return complex(math.fsum(z.real for z in zs), math.fsum(z.imag for z in zs))


def _chi_at(chi: PrimitiveCharacter, n: int) -> complex:
    j = chi.exponent(n)
    return 0j if j is None else root_of_unity(chi.order, j)


# ------------------------------------------------------------------ reports


@dataclass
class MomentReport:
    experiment: str
    family: str
    X_values: list
    empirical: list
    predicted: Optional[list] = None
    ratio: Optional[list] = None
    notes: list = field(default_factory=list)
    config: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "experiment": self.experiment,
            "family": self.family,
            "X_values": list(self.X_values),
            "empirical": list(self.empirical),
            "predicted": None if self.predicted is None else list(self.predicted),
            "ratio": None if self.ratio is None else list(self.ratio),
            "notes": list(self.notes),
            "config": dict(self.config),
            "details": dict(self.details),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def stem(self) -> str:
        xmax = max(self.X_values) if self.X_values else 0
        return f"{self.experiment}_{self.family}_{xmax}"

    def write(self, out_dir) -> tuple[Path, Path]:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        jpath = out / f"{self.stem()}.json"
        cpath = out / f"{self.stem()}.csv"
        jpath.write_text(self.to_json())
        with open(cpath, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(("X", "empirical", "predicted", "ratio"))
            for i, X in enumerate(self.X_values):
                pred = None if self.predicted is None else self.predicted[i]
                rat = None if self.ratio is None else self.ratio[i]
                w.writerow((X, repr(self.empirical[i]), "" if pred is None else repr(pred), "" if rat is None else repr(rat)))
        return jpath, cpath


# ------------------------------------------------------------------ twists


@dataclass(frozen=True)
class DecomposedTwist:
    family: str
    ell: int
    parts: tuple[int, ...]  # (l1, l2, l3) cubic, (l1, l2, l3, l4) quartic

    def reconstruct(self) -> int:
        out = 1
        for i, part in enumerate(self.parts, start=1):
            out *= part**i
        return out

    def root_factor(self) -> float:
        """1/sqrt(l1^2 l2) cubic, 1/sqrt(l1^3 l2^2 l3) quartic."""
        if self.family == "cubic":
            l1, l2, _ = self.parts
            return 1 / math.sqrt(l1 * l1 * l2)
        l1, l2, l3, _ = self.parts
        return 1 / math.sqrt(l1**3 * l2**2 * l3)


def decompose_twist(family: str, ell: int) -> DecomposedTwist:
    """Split l by the residues of its prime exponents mod 3 (resp. 4)."""
    d = ORDER[check_family(family)]
    if ell < 1:
        raise ValueError("l must be >= 1")
    parts = [1] * d
    for p, e in factorize(ell).items():
        r, top = e % d, e // d
        if r:
            parts[r - 1] *= p
        parts[d - 1] *= p**top
    return DecomposedTwist(family, ell, tuple(parts))


# ------------------------------------------------------------------ first moment


def predicted_first_moment(family: str, X: float, ell: int = 1, M: int = 10**6) -> tuple[float, float]:
    """(main term, certified absolute error of the constants) for the twisted first moment."""
    check_family(family)
    tw = decompose_twist(family, ell)
    c, c_err = c_K_constant(family)
    Z, Z_err = Z_K_truncated(family, Z_ARGUMENT[family], ell, M)
    phi1 = phi_hat(1).real
    scale = g_factor(family, G_SHIFT[family] * ell) * X * tw.root_factor() * phi1
    value = c * scale * Z
    # the truncated Z is short of the full series by at most Z_err
    err = scale * (c_err * (Z + Z_err) + c * Z_err) + abs(value) * 1e-10
    return value, err


def _smooth_slice(family: str, X: float) -> list[PrimitiveCharacter]:
    """Members with X < q < 2X, where Phi(q/X) can be nonzero."""
    fs = family_slice(family, int(2 * X))
    return [chi for chi in fs.members if X < chi.q < 2 * X]


def empirical_first_moment(family: str, X: float, ell: int, values: Values) -> complex:
    """sum L(1/2, chi) chi(l) Phi(q/X) over the family."""
    members = _smooth_slice(family, X)
    Ls = require_values(values, members, family)
    weights = phi_weight(np.array([chi.q for chi in members], dtype=np.float64) / X)
    terms = [L * _chi_at(chi, ell) * float(w) for chi, L, w in zip(members, Ls, np.atleast_1d(weights))]
    return _fsum_complex(terms)


def run_first_moment(family: str, Xs: Sequence[float], ell: int, values: Values) -> MomentReport:
    emp, pred, ratio, imag, errs = [], [], [], [], []
    for X in Xs:
        z = empirical_first_moment(family, X, ell, values)
        p, e = predicted_first_moment(family, X, ell)
        emp.append(z.real)
        imag.append(z.imag)
        pred.append(p)
        errs.append(e)
        ratio.append(z.real / p)
    tw = decompose_twist(family, ell)
    return MomentReport(
        experiment="first-moment" if ell == 1 else f"first-moment-l{ell}",
        family=family,
        X_values=list(Xs),
        empirical=emp,
        predicted=pred,
        ratio=ratio,
        notes=[
            "smooth weight Phi(q/X), support (X, 2X)",
            "predicted main term evaluated as printed; error term not included",
        ],
        config={"family": family, "twist": ell, "X": list(Xs)},
        details={"imag": imag, "predicted_abs_err": errs, "twist_parts": list(tw.parts)},
    )


# ------------------------------------------------------------------ 2k-th moments


def moment_2k(family: str, X: float, k: float, values: Values) -> float:
    """sum |L(1/2, chi)|^(2k) over conductors q <= X (sharp cutoff)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    members = family_slice(family, int(X)).members
    if k == 0:
        return float(len(members))
    Ls = require_values(values, members, family)
    return math.fsum(abs(L) ** (2 * k) for L in Ls)


def run_moments(family: str, Xs: Sequence[float], k: float, values: Values) -> MomentReport:
    emp = [moment_2k(family, X, k, values) for X in Xs]
    notes = ["sharp cutoff q <= X"]
    details: dict = {}
    if len(Xs) >= 2 and all(X > math.e for X in Xs):
        xs = np.log(np.log(np.array(Xs, dtype=np.float64)))
        ys = np.log(np.array(emp) / np.array(Xs, dtype=np.float64))
        slope = float(np.polyfit(xs, ys, 1)[0])
        details = {"loglog_slope": slope, "expected_slope": k * k}
        notes.append("slope of log(moment/X) against log log X; the order of magnitude X (log X)^(k^2) predicts k^2")
    return MomentReport("moments", family, list(Xs), emp, None, None, notes, {"family": family, "k": k, "X": list(Xs)}, details)


# ------------------------------------------------------------------ Polya sums


def _is_power(c: int, d: int) -> bool:
    return all(e % d == 0 for e in factorize(c).values())


def polya_sum(family: str, X: float, c: int) -> tuple[complex, float, bool]:
    """(sum chi(c) Phi(q/X), predicted main term, whether c is a d-th power)."""
    check_family(family)
    if c < 1:
        raise ValueError("c must be >= 1")
    members = _smooth_slice(family, X)
    weights = np.atleast_1d(phi_weight(np.array([chi.q for chi in members], dtype=np.float64) / X))
    emp = _fsum_complex(_chi_at(chi, c) * float(w) for chi, w in zip(members, weights))
    power = _is_power(c, ORDER[family])
    pred = 0.0
    if power:
        cK, _ = c_K_constant(family)
        pred = cK * phi_hat(1).real * X * g_factor(family, G_SHIFT[family] * c)
    return emp, pred, power


def run_polya(family: str, X: float, cs: Sequence[int]) -> MomentReport:
    emp, pred, ratio, imag, powers = [], [], [], [], []
    for c in cs:
        z, p, is_pow = polya_sum(family, X, c)
        emp.append(z.real)
        imag.append(z.imag)
        pred.append(p)
        ratio.append(z.real / p if is_pow else None)
        powers.append(is_pow)
    return MomentReport(
        "polya",
        family,
        [X] * len(cs),
        emp,
        pred,
        ratio,
        ["one row per c; non-power c have predicted main term 0", f"non-power bound X^0.75 = {X ** 0.75!r}"],
        {"family": family, "X": X, "c": list(cs)},
        {"c": list(cs), "imag": imag, "is_power": powers},
    )


# ------------------------------------------------------------------ mollifier


def truncated_exponential(ell: float, x: complex) -> complex:
    """E_l(x) = sum_{j <= ceil(l)} x^j / j!.

    Python numbers are summed in binary64 with compensation; other numeric
    types (mpmath, Fraction) are summed in their own arithmetic.
    """
    if ell < 0:
        raise ValueError("l must be >= 0")
    native = isinstance(x, (int, float, complex))
    term = 1.0 + 0j if native else x**0
    total = [term]
    for j in range(1, math.ceil(ell) + 1):
        term = term * x / j
        total.append(term)
    return _fsum_complex(total) if native else sum(total[1:], total[0])


def r_k(k: float) -> Optional[int]:
    """ceil(k/(2k - 1)) + 2; undefined (None) at k = 1/2."""
    if k <= 0.5:
        return None
    return math.ceil(k / (2 * k - 1)) + 2


def default_ladder(X: float, N: int = 1, M: int = 0) -> tuple[int, ...]:
    """l_1 = 2 ceil(N log log X), l_{j+1} = 2 ceil(N log l_j), kept while l_j > 10^M."""
    if X <= math.e:
        return ()
    ladder = []
    ell = 2 * math.ceil(N * math.log(math.log(X)))
    while ell > 10**M and (not ladder or ell < ladder[-1]):
        ladder.append(ell)
        ell = 2 * math.ceil(N * math.log(ell))
    return tuple(ladder)


@dataclass(frozen=True)
class MollifierConfig:
    X: float
    k: float
    ladder: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    N: int = 1
    M: int = 0

    @classmethod
    def build(cls, X: float, k: float, ladder: Optional[Sequence[int]] = None, N: int = 1, M: int = 0) -> "MollifierConfig":
        """Ladder from the default formula, or a validated override, with its prime blocks."""
        if ladder is None:
            ladder = default_ladder(X, N, M)
        ladder = tuple(int(x) for x in ladder)
        if any(x < 1 for x in ladder):
            raise ValueError("ladder entries must be positive integers")
        for a, b in zip(ladder, ladder[1:]):
            if not a > b * b:
                raise ValueError(f"ladder condition l_j > l_(j+1)^2 fails at ({a}, {b})")
        edges = [X ** (1 / (ell * ell)) for ell in ladder]
        primes = prime_sieve(int(math.floor(edges[-1])) + 1).tolist() if ladder else []
        blocks = []
        lo = 2.0  # P_1 holds odd primes only
        for hi in edges:
            blocks.append(tuple(p for p in primes if lo < p <= hi))
            lo = hi
        return cls(X, k, ladder, tuple(blocks), N, M)

    @property
    def R(self) -> int:
        return len(self.ladder)

    @property
    def r_k(self) -> Optional[int]:
        return r_k(self.k)

    def satisfies_sumoverell(self) -> bool:
        """(2 r_k + 2) sum 1/l_j <= 4(r_k + 1)/l_R < 1 (r_k = 3 used where undefined)."""
        if not self.ladder:
            return False
        rk = self.r_k or 3
        s = math.fsum(1 / x for x in self.ladder)
        return (2 * rk + 2) * s <= 4 * (rk + 1) / self.ladder[-1] < 1

    def check(self) -> None:
        if self.R == 0:
            raise EmptyLadder(f"the ladder for X = {self.X} is empty")


def block_sums(chi: PrimitiveCharacter, config: MollifierConfig) -> list[complex]:
    """P_j(chi) = sum_{p in P_j} chi(p)/sqrt(p), per block."""
    config.check()
    top = max((b[-1] for b in config.blocks if b), default=1)
    exps = chi.exponent_table(top)
    d = chi.order
    out = []
    for block in config.blocks:
        buckets: list[list[float]] = [[] for _ in range(d)]
        for p in block:
            j = int(exps[p])
            if j >= 0:
                buckets[j].append(p**-0.5)
        sums = [math.fsum(b) for b in buckets]
        out.append(_fsum_complex(root_of_unity(d, j) * sums[j] for j in range(d)))
    return out


def mollifier_blocks(chi: PrimitiveCharacter, config: MollifierConfig, alpha: float, sums=None) -> list[complex]:
    sums = block_sums(chi, config) if sums is None else sums
    return [truncated_exponential(ell, alpha * P) for ell, P in zip(config.ladder, sums)]


def mollifier_value(chi: PrimitiveCharacter, config: MollifierConfig, alpha: float, sums=None) -> complex:
    """N(chi, alpha) = prod_j E_{l_j}(alpha P_j(chi))."""
    out = 1 + 0j
    for v in mollifier_blocks(chi, config, alpha, sums):
        out *= v
    return out


def mollifier_divisor_sum(chi: PrimitiveCharacter, config: MollifierConfig, alpha: float) -> complex:
    """The same product expanded as Dirichlet polynomials over n_j built from P_j.

    Each block is sum n^(-1/2) alpha^Omega(n) / w(n) chi(n) over n with at most
    ceil(l_j) prime factors (with multiplicity) from P_j.
    """
    config.check()
    out = 1 + 0j
    for ell, block in zip(config.ladder, config.blocks):
        terms = []
        for size in range(math.ceil(ell) + 1):
            for combo in combinations_with_replacement(block, size):
                n = math.prod(combo)
                w = math.prod(math.factorial(combo.count(p)) for p in set(combo))
                terms.append(alpha**size / (w * math.sqrt(n)) * _chi_at(chi, n))
        out *= _fsum_complex(terms)
    return out


def q_factor_value(chi: PrimitiveCharacter, config: MollifierConfig, k: float, sums=None) -> list[complex]:
    """[Q_1, ..., Q_R, Q_{R+1} = 1] with Q_j = (12 k^2 P_j / l_j)^(r_k l_j)."""
    rk = r_k(k)
    if rk is None:
        raise ValueError("r_k is undefined at k = 1/2")
    sums = block_sums(chi, config) if sums is None else sums
    out = [(12 * k * k * P / ell) ** (rk * ell) for ell, P in zip(config.ladder, sums)]
    return out + [1 + 0j]


# ------------------------------------------------------------------ Hoelder


@dataclass
class HolderResult:
    family: str
    X: float
    k: float
    lhs: complex
    moment_factor: float
    mollifier_factor: float
    rhs: float
    rhs_exact_holder: float
    holds: bool
    holds_exact_holder: bool
    members: int


def holder_check(family: str, X: float, k: float, config: MollifierConfig, values: Values, rel_tol: float = 1e-9) -> HolderResult:
    """Both sides of the lower-bounds-principle inequality over the smooth slice.

    ``rhs`` is the printed right side; ``rhs_exact_holder`` replaces the
    product of |N_j|^2 + |Q_j|^2 by |N(chi, k-1) N(conj chi, k)|^(2k/(2k-1)),
    for which the inequality is plain Hoelder.
    """
    if k < 0.5:
        raise ValueError("k must be >= 1/2")
    config.check()
    members = _smooth_slice(family, X)
    Ls = require_values(values, members, family)
    weights = np.atleast_1d(phi_weight(np.array([chi.q for chi in members], dtype=np.float64) / X)).tolist()
    lhs_terms, mom_terms, mol_terms, exact_terms = [], [], [], []
    p_conj = 2 * k / (2 * k - 1) if k > 0.5 else None
    for chi, L, w in zip(members, Ls, weights):
        sums = block_sums(chi, config)
        n_k = mollifier_blocks(chi, config, k, sums)
        n_prev = mollifier_value(chi, config, k - 1, sums)
        n_k_val = math.prod(n_k) if n_k else 1
        lhs_terms.append(L * n_prev * n_k_val.conjugate() * w)
        mom_terms.append(abs(L) ** (2 * k) * w)
        if p_conj is not None:
            qs = q_factor_value(chi, config, k, sums)
            prod = 1.0
            for N_j, Q_j in zip(n_k, qs):
                prod *= abs(N_j) ** 2 + abs(Q_j) ** 2
            mol_terms.append(prod * w)
            exact_terms.append(abs(n_prev * n_k_val) ** p_conj * w)
    lhs = _fsum_complex(lhs_terms)
    mom = math.fsum(mom_terms) ** (1 / (2 * k))
    if p_conj is None:
        mol, exact = 1.0, 1.0
    else:
        mol = math.fsum(mol_terms) ** ((2 * k - 1) / (2 * k))
        exact = math.fsum(exact_terms) ** ((2 * k - 1) / (2 * k))
    rhs, rhs_exact = mom * mol, mom * exact
    return HolderResult(
        family, X, k, lhs, mom, mol, rhs, rhs_exact,
        lhs.real <= rhs * (1 + rel_tol), abs(lhs) <= rhs_exact * (1 + rel_tol), len(members),
    )


def run_holder(family: str, Xs: Sequence[float], ks: Sequence[float], values: Values, ladder=None) -> MomentReport:
    emp, rhs, ratio, rows = [], [], [], []
    xs = []
    for X in Xs:
        for k in ks:
            cfg = MollifierConfig.build(X, k, ladder)
            res = holder_check(family, X, k, cfg, values)
            xs.append(X)
            emp.append(res.lhs.real)
            rhs.append(res.rhs)
            ratio.append(res.lhs.real / res.rhs)
            rows.append(
                {"X": X, "k": k, "lhs_imag": res.lhs.imag, "rhs_exact_holder": res.rhs_exact_holder, "holds": res.holds,
                 "holds_exact_holder": res.holds_exact_holder, "ladder": list(cfg.ladder), "members": res.members}
            )
    return MomentReport(
        "holder", family, xs, emp, rhs, ratio,
        ["predicted column holds the printed right side", "k = 1/2 uses the first factor only"],
        {"family": family, "X": list(Xs), "k": list(ks), "ladder": None if ladder is None else list(ladder)},
        {"rows": rows},
    )


# ------------------------------------------------------------------ GRH log bound


@lru_cache(maxsize=None)
def lambda_0() -> float:
    """The positive root of e^-l = l + l^2/2."""
    return optimize.brentq(lambda x: math.exp(-x) - x - x * x / 2, 0.1, 1.0, xtol=1e-15)


@dataclass(frozen=True)
class LogBoundResult:
    key: CharKey
    lhs: float
    rhs: float
    holds: bool
    prime_sum: float


def grh_log_bound_check(
    chi: PrimitiveCharacter, L: complex, x: float, X: float, variant: str = "lambda0", slack: float = 2.0
) -> LogBoundResult:
    """log|L(1/2, chi)| against the GRH upper bound, O(.) replaced by ``slack``.

    variant "lambda0": slack * max(1, log log log X) stands in for O(log log log X).
    variant "one": slack stands in for O(1).
    """
    if L == 0:
        raise ZeroCentralValue(f"L(1/2, chi) = 0 for {chi.key}")
    if x < 2:
        raise ValueError("x must be >= 2")
    lx = math.log(x)
    lam = lambda_0() if variant == "lambda0" else 1.0
    if variant not in ("lambda0", "one"):
        raise ValueError(f"unknown variant {variant!r}")
    primes = prime_sieve(int(x)).tolist()
    exps = chi.exponent_table(int(x))
    d = chi.order
    terms = []
    for p in primes:
        j = int(exps[p])
        if j >= 0:
            terms.append(root_of_unity(d, j).real * p ** (-0.5 - lam / lx) * math.log(x / p) / lx)
    if variant == "one":
        for p in primes:
            if p > min(math.sqrt(x), math.log(X)):
                break
            j = int(exps[p])
            if j >= 0:
                terms.append(root_of_unity(d, 2 * j).real * p ** (-1 - 2 / lx) * math.log(x / (p * p)) / lx)
    s = math.fsum(terms)
    if variant == "lambda0":
        rhs = s + (1 + lam) / 2 * math.log(X) / lx + slack * max(1.0, math.log(math.log(math.log(X))))
    else:
        rhs = s + math.log(X) / lx + slack
    lhs = math.log(abs(L))
    return LogBoundResult(chi.key, lhs, rhs, lhs <= rhs, s)


def run_logbound(family: str, X: float, values: Values, slack: float = 2.0, variant: str = "lambda0") -> MomentReport:
    members = family_slice(family, int(X)).members
    Ls = require_values(values, members, family)
    results = [grh_log_bound_check(chi, L, chi.q, X, variant, slack) for chi, L in zip(members, Ls)]
    held = sum(r.holds for r in results)
    violations = [{"key": list(r.key), "lhs": r.lhs, "rhs": r.rhs, "prime_sum": r.prime_sum} for r in results if not r.holds]
    return MomentReport(
        "logbound", family, [X], [held / len(results)], [1.0], [held / len(results)],
        [f"x = q, variant {variant}, slack {slack!r}", "diagnostic: violations are listed, not asserted"],
        {"family": family, "X": X, "slack": slack, "variant": variant},
        {"members": len(results), "violations": violations, "min_margin": min(r.rhs - r.lhs for r in results)},
    )


# ------------------------------------------------------------------ non-vanishing


def nonvanishing_count(family: str, X: float, threshold: float, values: Values) -> tuple[int, float, list]:
    """(count with |L| > threshold, proportion, [(key, |L|) at or below threshold])."""
    members = family_slice(family, int(X)).members
    Ls = require_values(values, members, family)
    below = [(chi.key, abs(L)) for chi, L in zip(members, Ls) if not abs(L) > threshold]
    count = len(members) - len(below)
    return count, (count / len(members) if members else 0.0), below


def run_nonvanishing(family: str, X: float, threshold: float, values: Values) -> MomentReport:
    count, prop, below = nonvanishing_count(family, X, threshold, values)
    return MomentReport(
        "nonvanishing", family, [X], [prop], None, None,
        [f"threshold {threshold!r}", "members at or below the threshold are listed in details"],
        {"family": family, "X": X, "threshold": threshold},
        {"count": count, "below": [[list(k), v] for k, v in below]},
    )


# ------------------------------------------------------------------ prime sums


Coefficients = Union[Mapping[int, complex], Callable[[int], complex]]


def prime_sum_moment(family: str, X: float, y: float, m: int, coeffs: Coefficients = None) -> float:
    """sum over X/2 < q <= X of |sum_{p <= y} a(p) chi(p) / sqrt(p)|^(2m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    members = [chi for chi in family_slice(family, int(X)).members if X / 2 < chi.q <= X]
    if not members:
        raise MissingFamily(f"no {family} members with {X / 2} < q <= {X}")
    primes = prime_sieve(int(y)).tolist()
    if coeffs is None:
        a = [1.0] * len(primes)
    elif callable(coeffs):
        a = [complex(coeffs(p)) for p in primes]
    else:
        a = [complex(coeffs.get(p, 0)) for p in primes]
    out = []
    for chi in members:
        exps = chi.exponent_table(max(primes, default=1))
        s = _fsum_complex(
            a[i] * root_of_unity(chi.order, int(exps[p])) / math.sqrt(p)
            for i, p in enumerate(primes)
            if exps[p] >= 0
        )
        out.append(abs(s) ** (2 * m))
    return math.fsum(out)


def run_primesum(family: str, X: float, y: float, ms: Sequence[int]) -> MomentReport:
    emp = [prime_sum_moment(family, X, y, m) for m in ms]
    return MomentReport(
        "primesum", family, [X] * len(ms), emp, None, None,
        ["a(p) = 1, dyadic slice X/2 < q <= X", "growth in m reported, bound constant not asserted"],
        {"family": family, "X": X, "y": y, "m": list(ms)},
        {"m": list(ms)},
    )


def run_constants(family: str) -> MomentReport:
    ec = euler_constants(family)
    return MomentReport(
        "constants", family, [], [], None, None, ["see details"], {"family": family}, ec.to_dict()
    )
