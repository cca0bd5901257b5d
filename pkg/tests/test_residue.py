from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quotring.residue import ResidueRingZ, int_xgcd, stab

ints = st.integers(-10**6, 10**6)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (6, 10, (2, 2, -1, -5, 3)),
        (0, 0, (0, 1, 0, 0, 1)),
        (0, 7, (7, 0, 1, -1, 0)),
        (-4, 6, (2, 1, 1, -3, -2)),
    ],
)
def test_int_xgcd_values(a, b, expected):
    assert int_xgcd(a, b) == expected


@given(ints, ints)
def test_int_xgcd_certificate(a, b):
    g, s, t, u, v = int_xgcd(a, b)
    assert g == gcd(a, b)
    assert s * a + t * b == g
    assert u * a + v * b == 0
    assert s * v - t * u == 1


@given(st.integers(1, 500), st.integers(1, 40), st.integers(0, 10**4))
def test_stab_is_coprime_lift(m, k, x):
    n = m * k
    if gcd(x, m) != 1:
        x = 1
    y = stab(x, m, n)
    assert (y - x) % m == 0
    assert gcd(y, n) == 1


def test_z30_spec_values():
    R = ResidueRingZ(30)
    assert R.xgcd(6, 10) == (2, 2, 29, 25, 3)
    assert R.min_quotient(6, 2) == 3
    assert R.min_quotient(10, 2) == 5
    assert R.ann(10) == 3
    assert R.div(6, 2) in (3, 18)
    assert R.div(1, 2) is None
    assert R.bezout_coprime(3, 5) == (2, 29)
    assert R.bezout_coprime(2, 4) is None
    assert R.phi(0) == 30


@pytest.mark.parametrize("N", [1, 2, 6, 12, 30])
def test_exhaustive_contracts(N):
    R = ResidueRingZ(N)
    for a in range(N):
        for b in range(N):
            g, s, t, u, v = R.xgcd(a, b)
            assert (s * a + t * b - g) % N == 0
            assert (u * a + v * b) % N == 0
            assert (s * v - t * u - 1) % N == 0
            assert gcd(g, N) == gcd(gcd(a, b), N)
            if b % N:
                q, r = R.eudiv(a, b)
                assert (q * b + r - a) % N == 0
                assert r == 0 or R.phi(r) < R.phi(b)
            if R.div(a, b) is not None:
                c = R.min_quotient(a, b)
                assert (b * c - a) % N == 0
                assert R.phi(c) * R.phi(b) == R.phi(a)


@pytest.mark.parametrize("N", [6, 30, 36])
def test_unit_normalize_constant_on_associates(N):
    R = ResidueRingZ(N)
    units = [u for u in range(N) if gcd(u, N) == 1]
    for a in range(N):
        u, g = R.unit_normalize(a)
        assert gcd(u, N) == 1 and u * a % N == g
        assert {R.unit_normalize(a * w % N)[1] for w in units} == {g}
