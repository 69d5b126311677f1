"""Divisor search machinery for Fermat numbers F_n = 2^(2^n) + 1.

Every prime factor of F_n lies on the progression 2^(n+2) s + 1 (for
n >= 2), so membership can be tested with one modular exponentiation
instead of a division by the full F_n:

    2^(n+2) s + 1 divides F_n  <=>  2^(2^n - 2(n+2)) + s^2 = 0  (mod it)

which needs n >= 4 for the exponent to be non-negative.  Factor-pair
centers live on the coarser progression 2^(2n+3) lam + 1, searchable for
n >= 5 over lam in [ceil((sqrt(F_n)-1)/2^(2n+3)), 2^(2^n-(3n+5))).

Desk-scale reality check: the center search reproduces the factorization
of F_5 in a few thousand steps and F_6's small divisor is within reach of
the s search, but both searches take explicit budgets because anything
beyond that is hopeless by design, not by accident.
"""

from dataclasses import dataclass

from . import arith

__all__ = [
    "FermatTarget",
    "LucasDivisorCandidate",
    "LambdaCandidate",
    "LambdaSearchResult",
    "make_fermat",
    "lucas_check",
    "lucas_search",
    "lambda_interval",
    "lambda_search",
    "lambda_of_pair",
]


@dataclass(frozen=True)
class FermatTarget:
    index_n: int
    value: int  # 2^(2^index_n) + 1
    divisor_step: int  # 2^(index_n + 2)
    center_step: int  # 2^(2*index_n + 3)


@dataclass(frozen=True)
class LucasDivisorCandidate:
    """An index s with its progression member 2^(n+2) s + 1 and the
    membership residue (0 exactly when the member divides F_n)."""

    s: int
    divisor: int
    residue: int


@dataclass(frozen=True)
class LambdaCandidate:
    """A center index lam with center 2^(2n+3) lam + 1 and discriminant
    center^2 - F_n; root is present when the discriminant is square."""

    lam: int
    center: int
    disc: int
    root: int | None


@dataclass(frozen=True)
class LambdaSearchResult:
    """Outcome of a budgeted center scan.

    hits are the validated candidates (ascending); exhausted means the
    budget cut the scan short of the interval's upper end; examined and
    skipped count candidates square-tested and candidates removed by
    filters.
    """

    hits: list
    exhausted: bool
    examined: int
    skipped: int


def make_fermat(index_n: int) -> FermatTarget:
    """Build the target for F_n.  Callers impose their own size budgets;
    anything past index 30 stops being a desk-scale object."""
    if index_n < 0:
        raise ValueError("Fermat index must be >= 0")
    return FermatTarget(
        index_n=index_n,
        value=(1 << (1 << index_n)) + 1,
        divisor_step=1 << (index_n + 2),
        center_step=1 << (2 * index_n + 3),
    )


def _membership_exponent(t: FermatTarget) -> int:
    exponent = (1 << t.index_n) - 2 * (t.index_n + 2)
    if exponent < 0:
        raise ValueError("divisor-form check needs index >= 4")
    return exponent


def lucas_check(t: FermatTarget, s: int) -> LucasDivisorCandidate:
    """Membership test for 2^(n+2) s + 1, computed mod the candidate only."""
    if t.index_n < 4:
        raise ValueError("divisor-form check needs index >= 4")
    if s < 1:
        raise ValueError("s must be >= 1")
    exponent = _membership_exponent(t)
    divisor = t.divisor_step * s + 1
    residue = (pow(2, exponent, divisor) + s * s) % divisor
    return LucasDivisorCandidate(s=s, divisor=divisor, residue=residue)


def lucas_search(t: FermatTarget, s_max: int) -> list[LucasDivisorCandidate]:
    """All s in [1, s_max] whose progression member divides F_n, ascending.

    s_max is capped at the index of the last member below sqrt(F_n);
    a proper factor below the square root always sits under that cap, and
    members above it mirror cofactors of ones below.
    """
    if t.index_n < 4:
        raise ValueError("divisor-form search needs index >= 4")
    cap = (arith.isqrt(t.value - 1) >> (t.index_n + 2)) - 1
    exponent = _membership_exponent(t)
    step = t.divisor_step
    hits = []
    for s in range(1, min(s_max, cap) + 1):
        divisor = step * s + 1
        if (pow(2, exponent, divisor) + s * s) % divisor == 0:
            hits.append(LucasDivisorCandidate(s=s, divisor=divisor, residue=0))
    return hits


def lambda_interval(t: FermatTarget) -> tuple[int, int]:
    """Half-open range [lam_min, lam_sup) of center indices worth scanning.

    lam_min puts the center at or above ceil(sqrt(F_n)) (below it the
    discriminant is negative); lam_sup = 2^(2^n - (3n + 5)) bounds the
    center by the largest possible cofactor.  Needs index >= 5 for the
    upper exponent to be non-negative.
    """
    if t.index_n < 5:
        raise ValueError("center-index interval needs index >= 5")
    step = t.center_step
    lam_min = (arith.ceil_sqrt(t.value) - 1 + step - 1) // step
    lam_sup = 1 << ((1 << t.index_n) - (3 * t.index_n + 5))
    return lam_min, lam_sup


def lambda_search(
    t: FermatTarget,
    lam_budget: int,
    mod3: bool = False,
    mod4: bool = False,
    primes_3mod4=(),
) -> LambdaSearchResult:
    """Scan center indices ascending from lam_min, at most lam_budget of them.

    The optional filters skip lam = 2 mod 4, lam != 1 mod 3, and
    lam = 0 mod p for the given primes p = 3 mod 4.  They are heuristics:
    skipped indices are counted, never silently trusted, and the searched
    hit set on F_5 is known to be filter-independent.
    """
    if t.index_n < 5:
        raise ValueError("center search needs index >= 5")
    lam_min, lam_sup = lambda_interval(t)
    stop = min(lam_sup, lam_min + lam_budget)
    heuristic = tuple(p for p in primes_3mod4 if p % 4 == 3)
    value = t.value
    step = t.center_step
    hits = []
    examined = 0
    skipped = 0
    for lam in range(lam_min, stop):
        if mod4 and lam % 4 == 2:
            skipped += 1
            continue
        if mod3 and lam % 3 != 1:
            skipped += 1
            continue
        if heuristic and any(lam % p == 0 for p in heuristic):
            skipped += 1
            continue
        examined += 1
        center = step * lam + 1
        disc = center * center - value
        root = arith.is_perfect_square(disc)
        if root is None:
            continue
        if center - root <= 1:
            continue  # trivial split (1, F_n); certifies nothing
        assert (center - root) * (center + root) == value
        hits.append(LambdaCandidate(lam=lam, center=center, disc=disc, root=root))
    return LambdaSearchResult(
        hits=hits, exhausted=stop < lam_sup, examined=examined, skipped=skipped
    )


def lambda_of_pair(t: FermatTarget, p: int, q: int) -> int:
    """Recover the center index of a known proper factor pair p * q = F_n.

    lam = ((p+q)/2 - 1) / 2^(2n+3); the division is exact for every
    proper pair (a remainder would mean the progression itself is wrong,
    reported as an internal error).  The result is cross-checked against
    the divisor-form quotient (2^(2^n-2(n+2)) + s^2) / p with
    s = (p - 1) / 2^(n+2).
    """
    if t.index_n < 4:
        raise ValueError("pair-to-index recovery needs index >= 4")
    if not 1 < p <= q or p * q != t.value:
        raise ValueError(f"({p}, {q}) is not a proper factor pair of F_{t.index_n}")
    center = (p + q) // 2
    shifted = center - 1
    if shifted % t.center_step != 0:
        raise ArithmeticError(
            f"center {center} of pair ({p}, {q}) is off the 2^{2 * t.index_n + 3}*lam+1 progression"
        )
    lam = shifted // t.center_step
    s, s_rem = divmod(p - 1, t.divisor_step)
    if s_rem != 0:
        raise ArithmeticError(
            f"factor {p} is off the 2^{t.index_n + 2}*s+1 progression"
        )
    quotient_numerator = (1 << _membership_exponent(t)) + s * s
    if quotient_numerator != lam * p:
        raise ArithmeticError(
            f"cross-derivation failed for pair ({p}, {q}): divisor-form quotient "
            f"disagrees with center index {lam}"
        )
    return lam
