"""Unit and property tests for the integer helpers."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fermatsieve import arith


def test_isqrt_examples():
    assert arith.isqrt(9797) == 98  # 98^2 = 9604 <= 9797 < 9801 = 99^2
    assert arith.isqrt(0) == 0
    assert arith.isqrt(16) == 4


def test_isqrt_rejects_negative():
    with pytest.raises(ValueError):
        arith.isqrt(-1)


def test_ceil_sqrt_examples():
    assert arith.ceil_sqrt(9797) == 99
    assert arith.ceil_sqrt(16) == 4
    assert arith.ceil_sqrt(17) == 5
    assert arith.ceil_sqrt(0) == 0


def test_is_perfect_square_examples():
    assert arith.is_perfect_square(16) == 4
    assert arith.is_perfect_square(99 * 99 - 9797) == 2
    assert arith.is_perfect_square(5) is None
    assert arith.is_perfect_square(0) == 0
    assert arith.is_perfect_square(-4) is None


@given(st.integers(min_value=0, max_value=10**40))
def test_isqrt_postcondition(x):
    r = arith.isqrt(x)
    assert r * r <= x < (r + 1) * (r + 1)


@given(st.integers(min_value=0, max_value=10**40))
def test_ceil_sqrt_is_isqrt_plus_correction(x):
    r = arith.isqrt(x)
    assert arith.ceil_sqrt(x) == r + (0 if r * r == x else 1)


@given(st.integers(min_value=0, max_value=10**20))
def test_square_detection_roundtrip(r):
    assert arith.is_perfect_square(r * r) == r


@given(st.integers(min_value=2, max_value=10**20))
def test_between_squares_is_not_square(r):
    # r^2 < r^2 + r < (r+1)^2, so r^2 + r is never a square
    assert arith.is_perfect_square(r * r + r) is None


def test_sqrt_family_exhaustive_to_1e6():
    root = 0
    for x in range(10**6 + 1):
        if (root + 1) * (root + 1) <= x:
            root += 1
        assert arith.isqrt(x) == root
        exact = root * root == x
        assert arith.ceil_sqrt(x) == root + (0 if exact else 1)
        sq = arith.is_perfect_square(x)
        if exact:
            assert sq == root
        else:
            assert sq is None


def test_mod_inv_examples():
    assert arith.mod_inv(16, 7) == 4  # 16 = 2 (mod 7), 2*4 = 8 = 1
    for p in (3, 7, 101):
        assert arith.mod_inv(1, p) == 1
        assert arith.mod_inv(p - 1, p) == p - 1


def test_mod_inv_rejects_multiple_of_p():
    with pytest.raises(ValueError):
        arith.mod_inv(0, 7)
    with pytest.raises(ValueError):
        arith.mod_inv(14, 7)


def test_mod_inv_property_to_1000():
    for p in arith.primes_up_to(1000):
        if p == 2:
            continue
        for a in range(1, p):
            assert arith.mod_inv(a, p) * a % p == 1


def test_legendre_examples():
    assert arith.legendre(2, 7) == 1  # 3^2 = 2 (mod 7)
    assert arith.legendre(3, 7) == -1  # squares mod 7 are {0,1,2,4}
    assert arith.legendre(14, 7) == 0
    assert arith.legendre(-1, 5) == 1
    assert arith.legendre(-1, 7) == -1


def test_legendre_counts_residues():
    for p in arith.primes_up_to(200):
        if p == 2:
            continue
        plus = sum(1 for a in range(1, p) if arith.legendre(a, p) == 1)
        assert plus == (p - 1) // 2


def test_legendre_against_brute_force():
    for p in arith.primes_up_to(61):
        if p == 2:
            continue
        squares = {a * a % p for a in range(1, p)}
        for a in range(p):
            expected = 0 if a == 0 else (1 if a in squares else -1)
            assert arith.legendre(a, p) == expected


def test_is_prime_examples():
    assert arith.is_prime(101)
    assert not arith.is_prime(9797)  # 97 * 101
    assert arith.is_prime(6700417)


def test_6700417_prime_by_trial_division():
    n = 6700417
    for d in range(2, arith.isqrt(n) + 1):
        assert n % d != 0


def test_is_prime_agrees_with_sieve_to_1e6():
    flags = bytearray([1]) * (10**6 + 1)
    flags[0] = flags[1] = 0
    for i in range(2, 1001):
        if flags[i]:
            flags[i * i :: i] = bytes(len(flags[i * i :: i]))
    for x in range(10**6 + 1):
        assert arith.is_prime(x) == bool(flags[x]), x


def test_is_prime_above_64_bits_is_deterministic():
    m127 = (1 << 127) - 1  # Mersenne prime
    assert arith.is_prime(m127)
    assert arith.is_prime(m127)  # same witness schedule both times
    assert not arith.is_prime(m127 * ((1 << 89) - 1))


def test_primes_up_to_examples():
    assert arith.primes_up_to(10) == [2, 3, 5, 7]
    assert arith.primes_up_to(1) == []
    assert arith.primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_primes_up_to_against_trial_division():
    def dumb_prime(x):
        return x >= 2 and all(x % d for d in range(2, x))

    assert arith.primes_up_to(300) == [x for x in range(301) if dumb_prime(x)]
