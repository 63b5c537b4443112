import math

import pytest
from hypothesis import given, strategies as st

from artifact.characters import (
    character_from_generator,
    enumerate_family,
    family_slice,
    gauss_sum,
    gauss_sum_direct,
    parity,
    read_family_csv,
    root_number,
)
from artifact.ntheory import factorize
from artifact.symbols import root_of_unity
from oracles import brute_family_count

SMALL = {fam: family_slice(fam, 2000) for fam in ("cubic", "quartic")}


def test_small_slices():
    assert len(enumerate_family("cubic", 6)) == 0
    c7 = enumerate_family("cubic", 7)
    assert [chi.q for chi in c7] == [7, 7]
    assert c7.members[0].conjugate() == c7.members[1]
    q5 = enumerate_family("quartic", 5)
    assert [chi.q for chi in q5] == [5, 5]


def test_counts_at_1e5():
    # frozen after the brute-force oracle agreed on q <= 10^3
    assert len(family_slice("cubic", 10**5)) == 25936
    assert len(family_slice("quartic", 10**5)) == 28938


@pytest.mark.parametrize("family", ["cubic", "quartic"])
def test_count_per_conductor(family):
    d = 3 if family == "cubic" else 4
    bc = SMALL[family].by_conductor()
    for q in range(1, 400):
        f = factorize(q)
        split_sqfree = q > 1 and all(e == 1 and p % d == 1 for p, e in f.items())
        expected = 2 ** len(f) if split_sqfree else 0
        assert len(bc.get(q, [])) == expected
        assert expected == brute_family_count(q, family)


@pytest.mark.parametrize("family", ["cubic", "quartic"])
def test_canonical_order_and_conjugate_closure(family):
    members = SMALL[family].members
    keys = [(c.q, c.generator.a, c.generator.b) for c in members]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    allkeys = {c.key for c in members}
    for chi in members:
        assert chi.conjugate().key in allkeys
        assert chi.generator.is_primary()
        assert chi.generator.norm() == chi.q


@pytest.mark.parametrize("family", ["cubic", "quartic"])
def test_orthogonality_periodicity_order(family):
    d = 3 if family == "cubic" else 4
    for chi in SMALL[family].restrict(1, 500):
        vals = [chi(m) for m in range(1, chi.q + 1)]
        assert abs(sum(vals)) < 1e-9
        assert chi(1) == 1
        assert chi(3) == chi(3 + chi.q)
        exps = [chi.exponent(m) for m in range(1, chi.q)]
        present = {e for e in exps if e is not None}
        # exact order d: the values generate all d-th roots of unity
        assert present == set(range(d))
        if d == 4:
            assert {2 * e % 4 for e in present} == {0, 2}


@pytest.mark.parametrize("family", ["cubic", "quartic"])
def test_exponent_table_matches_symbol(family):
    for chi in SMALL[family].restrict(1, 300):
        tab = chi.exponent_table(600)
        for m in range(0, 601):
            j = chi.exponent(m)
            assert tab[m] == (-1 if j is None else j)


def test_parity():
    assert all(chi.parity == 0 for chi in SMALL["cubic"])
    for chi in enumerate_family("quartic", 5):
        assert chi.parity == 1  # (-1)^((5-1)/4) = -1
    for chi in SMALL["quartic"]:
        assert parity(chi) == chi.parity == parity(chi.conjugate())
        assert chi(-1) == (-1) ** chi.parity


def test_gauss_sums_small_conductors():
    for fam, q in (("cubic", 91), ("quartic", 65), ("quartic", 85)):
        for chi in SMALL[fam].by_conductor()[q]:
            assert abs(gauss_sum(chi) - gauss_sum_direct(chi)) < 1e-9


@pytest.mark.parametrize("family", ["cubic", "quartic"])
def test_gauss_sum_symmetries(family):
    for chi in SMALL[family].restrict(1, 800):
        tau = gauss_sum(chi)
        assert abs(abs(tau) - math.sqrt(chi.q)) < 1e-9
        assert abs(gauss_sum(chi.conjugate()) - chi(-1) * tau.conjugate()) < 1e-9
        eps = root_number(chi)
        assert abs(abs(eps) - 1) < 1e-9


@given(st.integers(0, 300))
def test_character_from_generator_roundtrip(idx):
    members = SMALL["cubic"].members
    chi = members[idx % len(members)]
    assert character_from_generator("cubic", chi.generator) == chi


def test_family_csv(tmp_path):
    fs = family_slice("quartic", 100)
    p = tmp_path / "f.csv"
    fs.to_csv(p)
    rows = read_family_csv(p)
    assert rows == [(c.family, c.q, c.generator.a, c.generator.b, c.parity) for c in fs]
    first = p.read_bytes()
    fs.to_csv(p)
    assert p.read_bytes() == first
    assert first.splitlines()[0] == b"family,q,gen_a,gen_b,parity"


def test_root_of_unity_table():
    assert root_of_unity(4, 1) == 1j
    assert abs(root_of_unity(3, 1) ** 3 - 1) < 1e-15
