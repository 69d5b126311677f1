"""Exact integer arithmetic helpers shared by the whole toolkit.

Everything works on plain Python ints, so magnitudes are unbounded and
nothing here can overflow.  All functions are pure.
"""

import math
import random

__all__ = [
    "isqrt",
    "ceil_sqrt",
    "is_perfect_square",
    "mod_inv",
    "legendre",
    "is_prime",
    "primes_up_to",
]


def isqrt(x: int) -> int:
    """Floor square root: the result r satisfies r*r <= x < (r+1)*(r+1)."""
    if x < 0:
        raise ValueError("isqrt is undefined for negative values")
    r = math.isqrt(x)
    assert r * r <= x < (r + 1) * (r + 1)
    return r


def ceil_sqrt(x: int) -> int:
    """Smallest r with r*r >= x."""
    if x < 0:
        raise ValueError("ceil_sqrt is undefined for negative values")
    r = math.isqrt(x)
    return r if r * r == x else r + 1


def _square_residues(modulus: int) -> bytes:
    table = bytearray(modulus)
    for r in range(modulus):
        table[r * r % modulus] = 1
    return bytes(table)


# Cheap rejection tables for the perfect-square test.  Only 12 of 64
# residues mod 64 are squares, so the first screen alone kills ~81% of
# non-squares; 63, 65 and 11 mop up most of the rest.
_SQ64 = _square_residues(64)
_SQ63 = _square_residues(63)
_SQ65 = _square_residues(65)
_SQ11 = _square_residues(11)


def is_perfect_square(x: int) -> int | None:
    """Return the integer square root of x if x is a perfect square, else None.

    Negative inputs are never squares.  The residue screens are a pure
    speedup; the decision is always made by the exact isqrt round-trip.
    """
    if x < 0:
        return None
    if not _SQ64[x & 63]:
        return None
    if not (_SQ63[x % 63] and _SQ65[x % 65] and _SQ11[x % 11]):
        return None
    r = math.isqrt(x)
    return r if r * r == x else None


def mod_inv(a: int, p: int) -> int:
    """Inverse of a modulo the odd prime p; rejects a divisible by p."""
    if a % p == 0:
        raise ValueError(f"{a} has no inverse modulo {p}")
    return pow(a, -1, p)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p: 0, +1 or -1."""
    if p <= 2 or p % 2 == 0:
        raise ValueError("legendre needs an odd prime modulus")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
)

# Strong-pseudoprime witnesses that decide primality exactly for every
# value below 2^64 (the well-known seven-base set).
_U64_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)


def _is_strong_probable_prime(x: int, base: int, d: int, s: int) -> bool:
    base %= x
    if base < 2:
        return True
    v = pow(base, d, x)
    if v == 1 or v == x - 1:
        return True
    for _ in range(s - 1):
        v = v * v % x
        if v == x - 1:
            return True
    return False


def is_prime(x: int, rounds: int = 24) -> bool:
    """Primality test: exact for x < 2^64, strong-probable-prime above.

    Above 2^64 the witness bases are drawn from random.Random(x), i.e. the
    schedule is a fixed function of the input, so repeated runs always
    return the same answer.
    """
    if x < 2:
        return False
    for p in _SMALL_PRIMES:
        if x % p == 0:
            return x == p
    if x < 9409:  # 97^2: no factor below the small-prime bound
        return True
    d = x - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if x < 1 << 64:
        witnesses = _U64_WITNESSES
    else:
        rng = random.Random(x)
        witnesses = tuple(rng.randrange(2, x - 1) for _ in range(rounds))
    return all(_is_strong_probable_prime(x, a, d, s) for a in witnesses)


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound, ascending (sieve of Eratosthenes)."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, bound + 1, i)))
    return [i for i in range(bound + 1) if sieve[i]]
