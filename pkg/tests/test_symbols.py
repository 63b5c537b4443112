import pytest
from hypothesis import given, strategies as st

from artifact.ntheory import primes_up_to
from artifact.ring import split_prime
from artifact.symbols import SymbolValue, composite_symbol, prime_exponent, prime_symbol
from oracles import units_exponent_oracle


def _kprimes(family, bound):
    d = 3 if family == "cubic" else 4
    return [pi for p in primes_up_to(bound) if p % d == 1 for pi in split_prime(p, family)]


PRIMES = {fam: _kprimes(fam, 200) for fam in ("cubic", "quartic")}


def test_symbol_value_group_law():
    a, b = SymbolValue(3, 1), SymbolValue(3, 2)
    assert (a * b).exponent == 0
    assert (a * SymbolValue.zero(3)).is_zero
    assert (a**3).exponent == 0
    assert a.conjugate() == b
    assert SymbolValue(4, 5).exponent == 1
    with pytest.raises(ValueError):
        SymbolValue(5, 0)


def test_prime_symbol_examples():
    pi, _ = split_prime(7, "cubic")
    assert prime_symbol(8, pi).exponent == 0
    assert prime_symbol(7, pi).is_zero
    # 2^2 = 4 is a nontrivial cube root of unity mod 7
    j = prime_exponent(2, pi)
    assert pow(pi.omega_image, j, 7) == 4
    assert j == units_exponent_oracle(2, pi.generator, 7, 3)


@pytest.mark.parametrize("family", ["cubic", "quartic"])
def test_against_two_coordinate_oracle(family):
    for pi in PRIMES[family]:
        for m in range(1, 60):
            assert prime_exponent(m, pi) == units_exponent_oracle(m, pi.generator, pi.p, pi.order)


@pytest.mark.parametrize("family", ["cubic", "quartic"])
@given(data=st.data())
def test_symbol_periodic_and_conjugate(family, data):
    pi = data.draw(st.sampled_from(PRIMES[family]))
    m = data.draw(st.integers(-10**6, 10**6))
    k = data.draw(st.integers(-50, 50))
    s = prime_symbol(m, pi)
    assert s == prime_symbol(m + k * pi.p, pi)
    if not s.is_zero:
        assert (s**pi.order).exponent == 0
    assert prime_symbol(m, pi.conjugate()) == s.conjugate()


@pytest.mark.parametrize("family", ["cubic", "quartic"])
@given(data=st.data())
def test_complete_multiplicativity(family, data):
    pis = data.draw(st.lists(st.sampled_from(PRIMES[family]), min_size=1, max_size=3, unique_by=lambda x: x.p))
    factors = [(pi, data.draw(st.integers(1, 3))) for pi in pis]
    m1 = data.draw(st.integers(1, 10**5))
    m2 = data.draw(st.integers(1, 10**5))
    assert composite_symbol(m1 * m2, factors) == composite_symbol(m1, factors) * composite_symbol(m2, factors)


def test_composite_symbol_examples():
    a, b = PRIMES["cubic"][0], PRIMES["cubic"][2]
    assert composite_symbol(5, [], order=3) == SymbolValue.one(3)
    with pytest.raises(ValueError):
        composite_symbol(5, [])
    for m in range(1, 50):
        assert composite_symbol(m, [(a, 1), (b, 1)]) == prime_symbol(m, a) * prime_symbol(m, b)
    assert composite_symbol(a.p * 2, [(a, 1), (b, 1)]).is_zero
