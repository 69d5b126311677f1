"""Candidate enumeration and residue filters for factoring N = 4n^2 + 1.

Targets split by the parity of the generator n.  Every proper factor pair
(a, b) of N has an odd center (a+b)/2 lying on a fixed progression:
8u + 1 when n is even (N = 16m^2 + 1), 8u + 3 when n is odd
(N = 4(2m+1)^2 + 1).  A candidate index u is a witness exactly when the
discriminant center^2 - N is a perfect square d^2, and then
N = (center - d)(center + d).

Two residue filters prune the u scan for a prime p not dividing N:

* the parametric form, which sweeps x over Z_p* and collects
  (x^-1 N + x - 2*offset) / 16 mod p, and
* the quadratic-residue form, which keeps u whenever
  (8u + offset)^2 - N is a square (or zero) mod p.

The two sets are always equal; the QR form never rejects a true witness,
so pruning with it cannot change the outcome of a search.  The extra
"heuristic" skips behind ``use_heuristic_filters`` do not share that
guarantee (the audit module measures how often they misfire) and are off
by default.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import arith

#: Centers advance by 8 per unit of u in both parity branches.
CENTER_STEP = 8

__all__ = [
    "CENTER_STEP",
    "QuadTarget",
    "Candidate",
    "FactorPair",
    "make_target",
    "u_interval",
    "u_range",
    "try_candidate",
    "pair_from_candidate",
    "admissible_residues_parametric",
    "admissible_residues_qr",
    "default_filter_primes",
    "iter_candidates",
    "sieve_enumerate",
    "compositeness_witness",
    "derive_u",
]


@dataclass(frozen=True)
class QuadTarget:
    """A number N = 4n^2 + 1 with its parity decomposition.

    n even: N = 16m^2 + 1 with n = 2m, centers 8u + 1.
    n odd:  N = 4(2m+1)^2 + 1 with n = 2m + 1, centers 8u + 3.
    """

    n: int
    N: int
    m: int
    offset: int  # 1 for even n, 3 for odd n

    @property
    def parity(self) -> str:
        return "even" if self.offset == 1 else "odd"


@dataclass(frozen=True)
class Candidate:
    """A sieve index u with its center, discriminant and (maybe) its root."""

    u: int
    center: int
    disc: int
    root: int | None


@dataclass(frozen=True)
class FactorPair:
    """A validated proper factorization N = a * b found at witness u."""

    a: int
    b: int
    witness_u: int
    d: int


def make_target(n: int) -> QuadTarget:
    """Build the target for generator n >= 1 (N = 1 has no proper factors)."""
    if n < 1:
        raise ValueError("generator n must be >= 1")
    N = 4 * n * n + 1
    if n % 2 == 0:
        return QuadTarget(n=n, N=N, m=n // 2, offset=1)
    return QuadTarget(n=n, N=N, m=(n - 1) // 2, offset=3)


def u_interval(t: QuadTarget) -> tuple[int, Fraction]:
    """Half-open candidate range [u_min, u_sup) for the sieve index u.

    u_min is the first index whose center reaches ceil(sqrt(N)), clamped
    to >= 1; u_sup is (N-5)/40 for even n and (N-15)/40 for odd n, kept
    exact as a fraction.  The range is empty when u_min >= u_sup, which
    happens only for small prime N.
    """
    lo = (arith.ceil_sqrt(t.N) - t.offset + 7) // 8
    u_min = max(lo, 1)
    if t.offset == 1:
        u_sup = Fraction(t.N - 5, 40)
    else:
        u_sup = Fraction(t.N - 15, 40)
    return u_min, u_sup


def u_range(t: QuadTarget) -> range:
    """The integers of u_interval as a range (empty when the interval is)."""
    u_min, u_sup = u_interval(t)
    last = (u_sup.numerator - 1) // u_sup.denominator  # largest int < u_sup
    return range(u_min, last + 1)


def try_candidate(t: QuadTarget, u: int) -> Candidate:
    """Evaluate one index: center, discriminant, and root when it is square."""
    center = CENTER_STEP * u + t.offset
    disc = center * center - t.N
    root = arith.is_perfect_square(disc) if disc >= 0 else None
    return Candidate(u=u, center=center, disc=disc, root=root)


def pair_from_candidate(t: QuadTarget, cand: Candidate) -> FactorPair:
    """Turn a candidate with a square discriminant into a validated pair.

    Rejects candidates without a root and the trivial split a = 1 (which
    is what a prime N would produce at its only square center).
    """
    if cand.root is None:
        raise ValueError(f"candidate u={cand.u} has no square discriminant")
    a = cand.center - cand.root
    b = cand.center + cand.root
    if a <= 1:
        raise ValueError(f"candidate u={cand.u} gives the trivial split (1, N)")
    if a * b != t.N:
        raise ValueError(f"candidate u={cand.u} is inconsistent: {a}*{b} != {t.N}")
    if a % 4 != 1 or b % 4 != 1:
        raise ValueError(f"factors {a}, {b} are not both 1 mod 4; corrupt candidate")
    return FactorPair(a=a, b=b, witness_u=cand.u, d=cand.root)


def _check_filter_prime(t: QuadTarget, p: int) -> None:
    if p == 2:
        raise ValueError("filter primes must be odd")
    if t.N % p == 0:
        raise ValueError(f"{p} divides N = {t.N}; it is a factor, not a filter")


def admissible_residues_parametric(t: QuadTarget, p: int) -> set[int]:
    """Residues of u mod p compatible with a factor, by the inverse sweep.

    The set is { (x^-1 N + x - 2*offset) / 16 mod p : x in 1..p-1 }.
    """
    _check_filter_prime(t, p)
    shift = 2 * t.offset
    inv16 = arith.mod_inv(16, p)
    N = t.N
    return {(pow(x, -1, p) * N + x - shift) * inv16 % p for x in range(1, p)}


def admissible_residues_qr(t: QuadTarget, p: int) -> set[int]:
    """Residues r of u mod p whose discriminant can be a square mod p.

    Keeps r whenever (8r + offset)^2 - N is a quadratic residue or zero
    mod p, so a true witness is never excluded.
    """
    _check_filter_prime(t, p)
    out = set()
    for r in range(p):
        c = CENTER_STEP * r + t.offset
        if arith.legendre(c * c - t.N, p) != -1:
            out.add(r)
    return out


def default_filter_primes(t: QuadTarget, bound: int = 97) -> list[int]:
    """Odd primes <= bound that do not divide N (the usual filter set)."""
    return [p for p in arith.primes_up_to(bound) if p != 2 and t.N % p != 0]


def _residue_masks(t: QuadTarget, filter_primes) -> list[tuple[int, bytes]]:
    masks = []
    for p in filter_primes:
        mask = bytearray(p)
        for r in admissible_residues_qr(t, p):
            mask[r] = 1
        masks.append((p, bytes(mask)))
    return masks


def iter_candidates(t: QuadTarget, filter_primes=(), use_heuristic_filters: bool = False):
    """Yield a Candidate for every u in the interval that survives the filters.

    Filter primes must be odd and must not divide N.  The heuristic skips
    (u = 0 mod p for even n, 4u + 1 = 0 mod p for odd n, over the filter
    primes p = 3 mod 4) are applied only when use_heuristic_filters is set.
    """
    for p in filter_primes:
        _check_filter_prime(t, p)
    masks = _residue_masks(t, filter_primes)
    heuristic = [p for p in filter_primes if p % 4 == 3] if use_heuristic_filters else []
    odd_form = t.offset == 3
    for u in u_range(t):
        admissible = True
        for p, mask in masks:
            if not mask[u % p]:
                admissible = False
                break
        if not admissible:
            continue
        if heuristic:
            probe = 4 * u + 1 if odd_form else u
            if any(probe % p == 0 for p in heuristic):
                continue
        yield try_candidate(t, u)


def sieve_enumerate(
    t: QuadTarget,
    filter_primes=(),
    use_heuristic_filters: bool = False,
    want_all: bool = False,
) -> list[FactorPair]:
    """Search the candidate interval for factor pairs of N.

    N is first trial-divided by every filter prime: a caller-supplied
    prime that divides N is itself the answer and the residue filters
    would be undefined for it.  Otherwise u is scanned ascending, pruned
    by the QR residue sets (and the heuristic skips when requested), and
    each square discriminant is validated into a FactorPair.

    Returns the first pair found, or every pair ascending in u when
    want_all is set.  The factor gap d grows with u, so the first hit
    (smallest u) is always the most balanced split.  An empty list means
    the interval was exhausted with no hit; with heuristic filters off
    that certifies N prime, with them on it certifies nothing (a true
    witness may have been skipped).
    """
    for p in filter_primes:
        if p == 2:
            raise ValueError("filter primes must be odd")
        if t.N % p == 0:
            if p == t.N:
                return []  # N is this prime itself
            a, b = p, t.N // p
            if a > b:
                a, b = b, a
            return [FactorPair(a=a, b=b, witness_u=derive_u(t, a, b), d=(b - a) // 2)]
    if not filter_primes and not use_heuristic_filters and not want_all:
        # nothing to prune and only the first hit wanted: same scan as the
        # compositeness certificate, which has the tight loop
        witness = compositeness_witness(t)
        return [] if witness is None else [pair_from_candidate(t, witness)]
    found: list[FactorPair] = []
    for cand in iter_candidates(t, filter_primes, use_heuristic_filters):
        if cand.root is None:
            continue
        found.append(pair_from_candidate(t, cand))
        if not want_all:
            break
    return found


def compositeness_witness(t: QuadTarget) -> Candidate | None:
    """First u in the interval with a square discriminant, or None.

    The scan is unfiltered, so a hit is a compositeness certificate and
    None certifies N prime.  (Tight loop: this is the function that walks
    entire intervals when N is prime.)
    """
    span = u_range(t)
    if not span:
        return None
    square_root = arith.is_perfect_square
    center = CENTER_STEP * span.start + t.offset
    disc = center * center - t.N  # >= 0 from u_min on
    for u in span:
        root = square_root(disc)
        if root is not None:
            return Candidate(u=u, center=center, disc=disc, root=root)
        disc += 16 * center + 64  # (center+8)^2 - center^2
        center += 8
    return None


def derive_u(t: QuadTarget, a: int, b: int) -> int:
    """Recover the witness index u of a known proper factor pair a * b = N.

    u = ((a+b)/2 - offset) / 8.  Both divisions are exact for every
    proper pair; a remainder would mean the center progression itself is
    wrong, so that is reported as an internal error, not bad input.  The
    result is cross-checked against the independent small-factor identity
    (m^2 + b'^2 = u * a with a = 4b' + 1 for even n; u = m^2 + m - a'b'
    for odd n).
    """
    if not 1 < a <= b or a * b != t.N:
        raise ValueError(f"({a}, {b}) is not a proper factor pair of {t.N}")
    center = (a + b) // 2
    shifted = center - t.offset
    if shifted % CENTER_STEP != 0:
        raise ArithmeticError(
            f"center {center} of pair ({a}, {b}) is off the 8u+{t.offset} progression"
        )
    u = shifted // CENTER_STEP
    if t.offset == 1:
        small = (a - 1) // 4
        if t.m * t.m + small * small != u * a:
            raise ArithmeticError(
                f"cross-derivation failed for pair ({a}, {b}) of {t.N}: "
                f"m^2 + {small}^2 != {u} * {a}"
            )
    else:
        qa = (a - 1) // 4
        qb = (b - 1) // 4
        if t.m * t.m + t.m - qa * qb != u:
            raise ArithmeticError(
                f"cross-derivation failed for pair ({a}, {b}) of {t.N}: "
                f"m^2 + m - {qa}*{qb} != {u}"
            )
    return u
