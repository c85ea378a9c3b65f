import cmath
from math import gcd, prod

import pytest
from hypothesis import given, settings, strategies as st

from uclique import (
    DomainError,
    Factorization,
    euler_phi,
    factorize,
    mobius,
    ramanujan_sum,
    schemmel,
    schemmel_naive,
    schemmel_pair,
)
from uclique.number_theory import is_prime, smallest_prime_factor

PRIMES_TO_50 = [p for p in range(2, 51) if is_prime(p)]


@pytest.mark.parametrize("n, expected", [
    (1, ()),
    (12, ((2, 2), (3, 1))),
    (1000003, ((1000003, 1),)),
    (963761198400, ((2, 6), (3, 4), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1))),
])
def test_factorize_examples(n, expected):
    assert factorize(n).factors == expected


def test_1000003_is_prime_by_trial_division():
    assert all(1000003 % d for d in range(2, 1001))


@given(st.integers(min_value=1, max_value=10**9))
def test_factorization_invariants(n):
    fac = factorize(n)
    assert fac.value == n
    assert list(fac.primes) == sorted(set(fac.primes))
    assert all(is_prime(p) and a >= 1 for p, a in fac)


def test_factorization_rejects_unsorted():
    with pytest.raises(ValueError):
        Factorization(((3, 1), (2, 1)))


@pytest.mark.parametrize("fn", [factorize, mobius, euler_phi, smallest_prime_factor])
def test_zero_rejected(fn):
    with pytest.raises(DomainError):
        fn(0)


def test_schemmel_zero_rejected():
    with pytest.raises(DomainError):
        schemmel(2, 0)
    with pytest.raises(DomainError):
        schemmel_naive(2, 0)
    with pytest.raises(DomainError):
        schemmel(-1, 5)


@pytest.mark.parametrize("n, expected", [(1, 1), (6, 1), (4, 0), (30, -1), (7, -1), (12, 0)])
def test_mobius(n, expected):
    assert mobius(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (10, 4), (7, 6), (97, 96), (36, 12)])
def test_euler_phi(n, expected):
    assert euler_phi(n) == expected


def test_euler_phi_matches_gcd_scan():
    for n in range(1, 500):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@pytest.mark.parametrize("r, n, expected", [
    (2, 2, 0),
    (2, 15, 3),
    (2, 25, 15),
    (0, 360, 360),
    (3, 35, 8),
    (3, 10, 0),
])
def test_schemmel_examples(r, n, expected):
    assert schemmel(r, n) == expected


def test_schemmel_prime_power_closed_form():
    for p in PRIMES_TO_50:
        for a in range(1, 4):
            assert schemmel(2, p**a) == p ** (a - 1) * (p - 2)


@pytest.mark.parametrize("r, n, expected", [(0, 7, 7), (1, 10, 4), (2, 5, 3), (2, 15, 3)])
def test_schemmel_naive_examples(r, n, expected):
    assert schemmel_naive(r, n) == expected


def test_schemmel_naive_r2_n5_witnesses():
    # k in {1, 2, 3}: k and k+1 both coprime to 5
    ks = [k for k in range(1, 6) if gcd(k, 5) == 1 and gcd(k + 1, 5) == 1]
    assert ks == [1, 2, 3]


def test_schemmel_identity_chain():
    for n in range(1, 2001):
        assert schemmel(0, n) == n
        assert schemmel(1, n) == euler_phi(n)
    assert schemmel(5, 1) == 1


def test_schemmel_matches_naive_desk_range():
    for n in range(1, 301):
        for r in range(7):
            assert schemmel(r, n) == schemmel_naive(r, n), (r, n)


@settings(max_examples=300)
@given(st.integers(1, 500), st.integers(1, 500), st.integers(0, 6))
def test_schemmel_multiplicative(a, b, r):
    if gcd(a, b) == 1:
        assert schemmel(r, a * b) == schemmel(r, a) * schemmel(r, b)


@pytest.mark.parametrize("m, x, y, expected", [
    (0, 4, 7, 28),
    (3, 2, 3, 0),
    (5, 2, 3, 0),
    (2, 4, 5, 12),
    (2, 1, 5, 3),
])
def test_schemmel_pair(m, x, y, expected):
    assert schemmel_pair(m, x, y) == expected


def test_schemmel_pair_prime_power_bridge():
    for p in PRIMES_TO_50:
        for a in range(1, 5):
            for m in range(7):
                assert schemmel_pair(m, p ** (a - 1), p) == schemmel(m, p**a)


def _ramanujan_kluyver(n, j):
    # c_n(j) = sum over d | gcd(n, j) of mu(n/d) * d
    g = gcd(n, j)
    return sum(mobius(n // d) * d for d in range(1, g + 1) if g % d == 0)


def _ramanujan_roots(n, j):
    total = sum(cmath.exp(2j * cmath.pi * j * k / n) for k in range(1, n + 1) if gcd(k, n) == 1)
    return total.real


@pytest.mark.parametrize("n, j, expected", [(6, 0, 2), (6, 2, -1), (6, 3, -2), (1, 0, 1), (12, 13, 0)])
def test_ramanujan_examples(n, j, expected):
    assert ramanujan_sum(n, j) == expected


def test_ramanujan_matches_independent_formulas():
    for n in range(1, 121):
        for j in range(n):
            c = ramanujan_sum(n, j)
            assert c == _ramanujan_kluyver(n, j)
            assert abs(c - _ramanujan_roots(n, j)) < 1e-8


def test_ramanujan_divides_phi_and_rows_sum_to_zero():
    for n in range(1, 201):
        phi = euler_phi(n)
        row = [ramanujan_sum(n, j) for j in range(n)]
        assert all(isinstance(c, int) for c in row)
        assert all(phi % c == 0 for c in row if c)
        if n >= 2:
            assert sum(row) == 0


def test_large_products_stay_exact():
    n = prod(PRIMES_TO_50) ** 2
    assert schemmel(1, n) == prod(p * (p - 1) for p in PRIMES_TO_50)
    assert schemmel(1, n) > 2**64
