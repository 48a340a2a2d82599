"""σ(n) by prime factorization and by plain trial division, plus classification.

``sigma_trial`` is deliberately naive: it is the oracle every faster route is
checked against, so it shares no code with the factorization path.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from divsum.natural import U128_MAX, ContractError, checked, natural
from divsum.table import Provenance, SigmaTable, allocate, check_table_size


@dataclass(frozen=True)
class Factorization:
    """``subject == prod(p**e for p, e in factors)`` with primes strictly increasing."""

    subject: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        natural(self.subject, name="subject", minimum=1)
        product = 1
        previous = 1
        for p, e in self.factors:
            if p <= previous or p < 2 or e < 1:
                raise ContractError(f"malformed factor ({p}, {e}) in {self.factors}")
            previous = p
            product *= p**e
        if product != self.subject:
            raise ContractError(f"factors multiply to {product}, not {self.subject}")

    def __iter__(self):
        return iter(self.factors)


class Kind(str, enum.Enum):
    UNIT = "unit"
    PRIME = "prime"
    PERFECT = "perfect"
    ABUNDANT = "abundant"
    DEFICIENT = "deficient"


@dataclass(frozen=True)
class Classification:
    n: int
    kind: Kind
    sigma: int


def _trial_factors(n: int):
    """Yield (prime, exponent) by dividing out 2, 3 and then 6k +/- 1."""
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            yield p, e
    p = 5
    while p * p <= n:
        for q in (p, p + 2):
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            if e:
                yield q, e
        p += 6
    if n > 1:
        yield n, 1


def factorize(n: int) -> Factorization:
    """Factor ``n`` by deterministic trial division.

    >>> factorize(360).factors
    ((2, 3), (3, 2), (5, 1))
    """
    natural(n, minimum=1)
    return Factorization(n, tuple(_trial_factors(n)))


def prime_power_sigma(p: int, e: int) -> int:
    """1 + p + ... + p**e via the closed form (p**(e+1) - 1) / (p - 1)."""
    power = 1
    for _ in range(e + 1):
        power = checked(power * p, what=f"intermediate {p}^(e+1)", limit=U128_MAX)
    numerator = power - 1
    quotient, remainder = divmod(numerator, p - 1)
    assert remainder == 0, "geometric sum must divide exactly"
    return checked(quotient, what=f"sigma({p}^{e})")


def sigma_factored(f: Factorization) -> int:
    total = 1
    for p, e in f:
        total = checked(total * prime_power_sigma(p, e), what=f"sigma({f.subject})")
    return total


def sigma(n: int) -> int:
    """σ(n) through the factorization route."""
    return sigma_factored(factorize(n))


def divisors(n: int) -> list[int]:
    natural(n, minimum=1)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def sigma_trial(n: int) -> int:
    """Sum every divisor found by trial division up to sqrt(n)."""
    natural(n, minimum=1)
    total = 0
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            total += d
            co = n // d
            if co != d:
                total += co
    return checked(total, what=f"sigma({n})")


def classify(n: int, sigma_value: int | None = None) -> Classification:
    """Sort ``n`` into unit, prime, perfect, abundant or deficient by σ(n).

    Primes are deficient too; ``prime`` wins so that every n gets exactly one
    kind.
    """
    natural(n, minimum=1)
    s = sigma(n) if sigma_value is None else sigma_value
    if n == 1:
        kind = Kind.UNIT
    elif s == n + 1:
        kind = Kind.PRIME
    elif s == 2 * n:
        kind = Kind.PERFECT
    elif s > 2 * n:
        kind = Kind.ABUNDANT
    else:
        kind = Kind.DEFICIENT
    return Classification(n, kind, s)


def is_amicable_pair(m: int, n: int) -> bool:
    natural(m, name="m", minimum=2)
    natural(n, name="n", minimum=2)
    if m == n:
        return False
    target = m + n
    return sigma(m) == target and sigma(n) == target


def sigma_table_sieve(n_max: int) -> SigmaTable:
    """Add every d to all of its multiples; O(N log N) additions."""
    check_table_size(n_max)
    values = allocate(n_max + 1)
    half = n_max // 2
    for d in range(1, half + 1):
        values[d::d] += np.uint64(d)
    # past N/2 the only multiple of d in range is d itself
    values[half + 1 :] += np.arange(half + 1, n_max + 1, dtype=np.uint64)
    return SigmaTable(values[1:], Provenance.SIEVE)


def sigma_table_factored(n_max: int) -> SigmaTable:
    """One independent factorization per entry; the slow but obvious baseline."""
    check_table_size(n_max)
    values = allocate(n_max)
    for n in range(1, n_max + 1):
        values[n - 1] = sigma(n)
    return SigmaTable(values, Provenance.FACTORIZED)


def amicable_pairs(n_max: int, table: SigmaTable | None = None) -> list[tuple[int, int]]:
    """All (m, n) with m < n <= n_max and σ(m) = σ(n) = m + n, from one sieve pass."""
    natural(n_max, name="N", minimum=2)
    if table is None:
        table = sigma_table_sieve(n_max)
    s = table.tolist()
    pairs = []
    for m in range(2, n_max + 1):
        partner = s[m - 1] - m
        if m < partner <= n_max and s[partner - 1] == s[m - 1] == m + partner:
            pairs.append((m, partner))
    return pairs


__all__ = [
    "Classification",
    "Factorization",
    "Kind",
    "amicable_pairs",
    "classify",
    "divisors",
    "factorize",
    "is_amicable_pair",
    "prime_power_sigma",
    "sigma",
    "sigma_factored",
    "sigma_table_factored",
    "sigma_table_sieve",
    "sigma_trial",
]
