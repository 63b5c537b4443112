import cmath
import math

import mpmath
import pytest

from artifact.characters import family_slice, root_number
from artifact.errors import ConductorTooLargeForOracle, NonPositiveArgument
from artifact.lvalues import (
    WeightKernel,
    afe_central_value,
    central_values,
    cutoff,
    direct_central_value,
    tail_bound,
    v_weight,
)

SLICES = {fam: family_slice(fam, 500) for fam in ("cubic", "quartic")}


def _mellin_v(parity, x):
    """(1/2 pi i) int_(2) Gamma(c + s/2)/Gamma(c) pi^(-s/2) x^(-s) ds/s."""
    c = (0.5 + parity) / 2

    def f(t):
        s = mpmath.mpc(2, t)
        return (mpmath.gamma(c + s / 2) * mpmath.pi ** (-s / 2) * mpmath.mpf(x) ** (-s) / s).real

    return float(mpmath.quad(f, [-mpmath.inf, -20, 0, 20, mpmath.inf]) / (2 * mpmath.pi) / mpmath.gamma(c))


@pytest.mark.parametrize("parity", [0, 1])
@pytest.mark.parametrize("x", [0.1, 1.0, 2.0])
def test_v_weight_matches_mellin_integral(parity, x):
    assert abs(v_weight(parity, x) - _mellin_v(parity, x)) < 1e-10


@pytest.mark.parametrize("parity", [0, 1])
def test_v_weight_shape(parity):
    xs = [0.01 * k for k in range(1, 400)]
    vs = [v_weight(parity, x) for x in xs]
    assert all(a >= b for a, b in zip(vs, vs[1:]))
    assert 0 < vs[-1] < vs[0] <= 1
    assert WeightKernel(parity)(0.5) == v_weight(parity, 0.5)
    with pytest.raises(NonPositiveArgument):
        v_weight(parity, 0.0)


def test_cutoff_is_minimal():
    for c in (0.25, 0.75):
        for A in (3.0, 30.0, 300.0):
            M = cutoff(c, A, 1e-10)
            assert tail_bound(c, A, M) <= 1e-10
            assert M == 1 or tail_bound(c, A, M - 1) > 1e-10


@pytest.mark.parametrize("family", ["cubic", "quartic"])
def test_afe_agrees_with_direct(family):
    for chi in SLICES[family]:
        a = afe_central_value(chi)
        d = direct_central_value(chi)
        assert abs(a.value - d.value) < 1e-9
        assert a.truncation_error <= 1e-10


@pytest.mark.parametrize("family", ["cubic", "quartic"])
def test_truncation_bound_honored(family):
    for chi in family_slice(family, 20000).restrict(19000, 20000):
        a = afe_central_value(chi)
        b = afe_central_value(chi, M_scale=2.0)
        assert abs(a.value - b.value) <= a.truncation_error + 1e-12


@pytest.mark.parametrize("family", ["cubic", "quartic"])
def test_split_independence(family):
    # the AFE value does not depend on the split A B = q
    for chi in SLICES[family].restrict(400, 500):
        a = afe_central_value(chi).value
        b = afe_central_value(chi, A=chi.q**0.3).value
        assert abs(a - b) < 1e-9


@pytest.mark.parametrize("family", ["cubic", "quartic"])
def test_conjugation(family):
    for chi in SLICES[family].restrict(1, 300):
        a = afe_central_value(chi).value
        b = afe_central_value(chi.conjugate()).value
        assert abs(a.conjugate() - b) < 1e-10


def test_functional_equation_consistency():
    # L(1/2, chi) = eps(chi) L(1/2, conj chi)
    for chi in SLICES["quartic"].restrict(1, 300):
        a = afe_central_value(chi).value
        b = afe_central_value(chi.conjugate()).value
        assert abs(a - root_number(chi) * b) < 1e-9


def test_direct_cap_and_errors():
    chi = family_slice("cubic", 6000).restrict(5001, 6000).members[0]
    with pytest.raises(ConductorTooLargeForOracle):
        direct_central_value(chi)
    with pytest.raises(NonPositiveArgument):
        afe_central_value(chi, A=-1.0)
    with pytest.raises(ValueError):
        central_values([chi], method="bogus")


def test_thread_count_does_not_change_values():
    chars = family_slice("cubic", 3000).members
    one = central_values(chars, threads=1)
    many = central_values(chars, threads=4)
    assert [r.value for r in one] == [r.value for r in many]
