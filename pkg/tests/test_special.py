import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from artifact.special import bernoulli, dirichlet_l_real, gammaincc, hurwitz_zeta


def test_bernoulli_examples():
    from fractions import Fraction

    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(7) == 0


def test_zeta_half():
    v, err = hurwitz_zeta(0.5, 1.0)
    assert abs(v - float(mpmath.zeta(0.5))) < 1e-13
    assert err < 1e-12


@given(s=st.floats(0.2, 4.0).filter(lambda s: abs(s - 1) > 1e-3), a=st.floats(0.01, 5.0))
def test_hurwitz_against_mpmath(s, a):
    v, err = hurwitz_zeta(s, a)
    ref = float(mpmath.zeta(s, a))
    assert abs(v - ref) <= err + 1e-12 * abs(ref)


def test_hurwitz_vectorized_and_errors():
    a = np.array([0.25, 0.5, 0.75])
    vals, bounds = hurwitz_zeta(0.5, a)
    for x, v in zip(a, vals):
        assert abs(v - float(mpmath.zeta(0.5, x))) < 1e-12
    with pytest.raises(ValueError):
        hurwitz_zeta(1.0, 1.0)
    with pytest.raises(ValueError):
        hurwitz_zeta(0.5, 0.0)


def test_dirichlet_l_real():
    v, _ = dirichlet_l_real(4, 2.0)
    assert abs(v - float(mpmath.catalan)) < 1e-13
    v, _ = dirichlet_l_real(3, 1.5)
    ref = float(3**-1.5 * (mpmath.zeta(1.5, mpmath.mpf(1) / 3) - mpmath.zeta(1.5, mpmath.mpf(2) / 3)))
    assert abs(v - ref) < 1e-13


@given(c=st.sampled_from([0.25, 0.75, 1.5]), x=st.floats(0.0, 80.0))
def test_gammaincc_against_mpmath(c, x):
    ref = float(mpmath.gammainc(c, x, mpmath.inf, regularized=True))
    assert abs(gammaincc(c, x) - ref) <= 1e-14 + 1e-12 * ref
