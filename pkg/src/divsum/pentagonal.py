"""Generalized pentagonal numbers j(3j-1)/2 for j = 1, -1, 2, -2, ...

Positive j gives the ordinary pentagonal numbers 1, 5, 12, 22, ...; negative
j gives the same sequence continued backwards, 2, 7, 15, 26, ... Merged in
value order they read 1, 2, 5, 7, 12, 15, 22, 26, with recurrence signs
+ + - - + + - - ...
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from divsum.natural import DomainError, checked, natural


@dataclass(frozen=True)
class GPentTerm:
    index: int
    value: int
    sign: int

    @classmethod
    def of(cls, j: int) -> GPentTerm:
        return cls(j, gpent(j), recurrence_sign(j))


def recurrence_sign(j: int) -> int:
    """+1 for odd |j|, -1 for even |j|."""
    if j == 0:
        raise DomainError("pentagonal index must be nonzero")
    return 1 if j % 2 else -1


def gpent(j: int) -> int:
    if isinstance(j, bool) or not isinstance(j, int):
        raise DomainError(f"index must be an integer, got {type(j).__name__}")
    if j == 0:
        raise DomainError("pentagonal index must be nonzero")
    return checked(j * (3 * j - 1) // 2, what=f"gpent({j})")


def gpent_sequence(limit: int) -> list[GPentTerm]:
    """Every generalized pentagonal term with value <= limit, in increasing value."""
    natural(limit, name="limit")
    terms = []
    k = 1
    # j = k and j = -k give (3k^2 - k)/2 < (3k^2 + k)/2 < next k's first term
    while (3 * k * k - k) // 2 <= limit:
        terms.append(GPentTerm.of(k))
        if (3 * k * k + k) // 2 <= limit:
            terms.append(GPentTerm.of(-k))
        k += 1
    return terms


def is_gpent(n: int) -> int | None:
    """Return the index j with gpent(j) == n, or None.

    gpent(j) = n  <=>  (6j - 1)^2 = 24n + 1, so n qualifies exactly when
    24n + 1 is a perfect square m^2; m = 6j - 1 for j > 0 (m = 5 mod 6) and
    m = 1 - 6j for j < 0 (m = 1 mod 6).
    """
    natural(n, minimum=1)
    disc = 24 * n + 1
    m = math.isqrt(disc)
    if m * m != disc:
        return None
    if m % 6 == 5:
        return (m + 1) // 6
    return -((m - 1) // 6)
