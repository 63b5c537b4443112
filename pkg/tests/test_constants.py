import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from artifact.constants import (
    PHI,
    Z_K_truncated,
    c_K_constant,
    c_K_direct,
    euler_constants,
    g_factor,
    g_sup,
    phi_hat,
    phi_hat_gauss_legendre,
    residue_rK,
    residue_rK_digamma,
    zeta_K_at_2,
    zeta_K_at_2_euler,
)
from artifact.errors import DivergentParameter
from artifact.ntheory import radical

FAMS = ["cubic", "quartic"]


def test_residue_two_routes():
    assert residue_rK("cubic") == pytest.approx(math.pi / (3 * math.sqrt(3)), abs=1e-15)
    assert residue_rK("quartic") == pytest.approx(math.pi / 4, abs=1e-15)
    for fam in FAMS:
        assert abs(residue_rK(fam) - residue_rK_digamma(fam)) < 1e-14


def test_zeta_K2_two_routes_and_mpmath():
    # zeta_K(2) = zeta(2) L(2, chi_D)
    cubic = float(mpmath.zeta(2) * 3**-2 * (mpmath.zeta(2, mpmath.mpf(1) / 3) - mpmath.zeta(2, mpmath.mpf(2) / 3)))
    quartic = float(mpmath.zeta(2) * mpmath.catalan)
    assert abs(zeta_K_at_2("cubic") - cubic) < 1e-13
    assert abs(zeta_K_at_2("quartic") - quartic) < 1e-13
    for fam in FAMS:
        assert abs(zeta_K_at_2(fam) - zeta_K_at_2_euler(fam)) < 1e-9


def test_c_K_two_routes_and_frozen():
    frozen = {"cubic": 0.3142640673752873, "quartic": 0.4203234149094033}
    for fam in FAMS:
        v, err = c_K_constant(fam)
        assert err < 1e-11
        assert abs(v - frozen[fam]) < 1e-13
        assert abs(v - c_K_direct(fam)) < 1e-9


def test_g_examples():
    assert g_factor("cubic", 1) == 1.0
    # 2 is inert in Z[w]: (1/(1 + 1/4)) / (1 - 1/(4 (1 - 1/16))) = 12/11
    assert g_factor("cubic", 2) == pytest.approx(12 / 11, rel=1e-14)
    assert g_factor("cubic", 3) == pytest.approx(6 / 7, rel=1e-14)
    with pytest.raises(ValueError):
        g_factor("cubic", 0)


@pytest.mark.parametrize("family", FAMS)
@given(c=st.integers(1, 10**6))
def test_g_depends_on_radical_and_bounded(family, c):
    g = g_factor(family, c)
    assert g == pytest.approx(g_factor(family, radical(c)), rel=1e-14)
    assert 0 < g <= g_sup(family)


def test_g_sup_values():
    assert g_sup("cubic") == pytest.approx(1.0928, abs=1e-4)
    assert g_sup("quartic") == pytest.approx(1.0146, abs=1e-4)


@pytest.mark.parametrize("family", FAMS)
def test_Z_K_brute_force(family):
    from artifact.ring import DISCRIMINANT

    D = DISCRIMINANT[family]
    for ell in (1, 2, 7):
        v, _ = Z_K_truncated(family, 1.5, ell, M=2000)
        ref = math.fsum(m**-1.5 * g_factor(family, m // math.gcd(m, D * ell)) for m in range(1, 2001))
        assert abs(v - ref) < 1e-12


@pytest.mark.parametrize("family", FAMS)
def test_Z_K_tail_and_monotone(family):
    for u in (1.5, 2.0, 3.0):
        a, ta = Z_K_truncated(family, u, 1, M=10**4)
        b, _ = Z_K_truncated(family, u, 1, M=2 * 10**4)
        assert 0 < b - a <= ta
    vals = [Z_K_truncated(family, u, 1, M=10**4)[0] for u in (1.5, 2.0, 3.0)]
    assert vals[0] > vals[1] > vals[2] > 1
    with pytest.raises(DivergentParameter):
        Z_K_truncated(family, 1.0, 1)


def test_Z_K_frozen():
    v, tail = Z_K_truncated("cubic", 1.5, 1)
    assert v + tail / 2 == pytest.approx(2.63563, abs=2e-3)
    v, tail = Z_K_truncated("quartic", 2.0, 1)
    assert v == pytest.approx(1.62730, abs=1e-5)


def test_phi_shape():
    xs = np.linspace(0.5, 2.5, 2001)
    ys = PHI(xs)
    assert np.all((ys >= 0) & (ys <= 1))
    assert np.all(ys[(xs <= 1) | (xs >= 2)] == 0)
    assert np.all(ys[(xs >= 1.25) & (xs <= 1.75)] == 1)
    up = ys[(xs >= 1) & (xs <= 1.25)]
    assert np.all(np.diff(up) >= 0)


def test_phi_hat_at_one():
    # the ramps are point-symmetric, so int Phi = plateau midpoint width 3/4
    assert abs(phi_hat(1) - 0.75) < 1e-10
    assert abs(phi_hat_gauss_legendre(1) - 0.75) < 1e-12


@given(t=st.floats(-60, 60))
def test_phi_hat_two_quadratures(t):
    s = complex(1, t)
    assert abs(phi_hat(s) - phi_hat_gauss_legendre(s)) < 1e-10


def test_phi_hat_conjugate_symmetry():
    s = complex(1, 17.5)
    assert abs(phi_hat(s.conjugate()) - phi_hat(s).conjugate()) < 1e-12


def test_phi_hat_decay():
    ts = [640.0, 1280.0, 2560.0]
    vals = [abs(phi_hat_gauss_legendre(complex(1, t), nodes=64, panels=256)) for t in ts]
    slope = math.log(vals[-1] / vals[0]) / math.log(ts[-1] / ts[0])
    assert slope < -5


def test_euler_constants_table():
    for fam in FAMS:
        e = euler_constants(fam)
        d = e.to_dict()
        assert set(d) == {"family", "r_K", "zeta_K2", "c_K", "phi_hat_1", "precision"}
        assert d["phi_hat_1"] == pytest.approx(0.75, abs=1e-10)
        assert euler_constants(fam) is e
