"""Truncated power series with exact integer coefficients.

Just enough algebra to expand (1-x)(1-x^2)(1-x^3)..., compare it with the
pentagonal series, and read σ(n) off as the coefficients of -x s'/s, both as
the quotient (pentagonal numerator) / (pentagonal series) and as the Lambert
series sum k x^k / (1 - x^k).

Every series carries its truncation order explicitly; coefficients above the
order are simply not represented.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from divsum.natural import CapacityError, DomainError, checked_signed, natural
from divsum.pentagonal import gpent_sequence

# Dense list storage; anything past this is refused rather than attempted.
MAX_SERIES_ORDER = 1_000_000


def _order(order: int) -> int:
    natural(order, name="order")
    if order > MAX_SERIES_ORDER:
        raise CapacityError(f"order {order} exceeds the series capacity of {MAX_SERIES_ORDER}")
    return order


@dataclass(frozen=True)
class IntSeries:
    """c_0 + c_1 x + ... + c_order x^order, each c_i a signed 64-bit integer."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _order(self.order)
        if len(self.coeffs) != self.order + 1:
            raise DomainError(f"order {self.order} needs {self.order + 1} coefficients, got {len(self.coeffs)}")
        for c in self.coeffs:
            checked_signed(c)

    @classmethod
    def of(cls, coeffs: Iterable[int], order: int | None = None) -> IntSeries:
        """Build from a coefficient list, zero-padding or truncating to ``order``."""
        cs = list(coeffs)
        if order is None:
            order = max(len(cs) - 1, 0)
        cs = (cs + [0] * (order + 1))[: order + 1]
        return cls(order, tuple(cs))

    @classmethod
    def zero(cls, order: int) -> IntSeries:
        return cls(order, (0,) * (order + 1))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i <= self.order else 0

    def truncate(self, order: int) -> IntSeries:
        return IntSeries.of(self.coeffs, order)

    def support(self) -> list[int]:
        """Indices of the nonzero coefficients."""
        return [i for i, c in enumerate(self.coeffs) if c]

    def __str__(self) -> str:
        out = ""
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            mono = "x" if i == 1 else f"x^{i}"
            body = str(mag) if i == 0 else (mono if mag == 1 else f"{mag}{mono}")
            if not out:
                out = body if c > 0 else f"-{body}"
            else:
                out += f" {'+' if c > 0 else '-'} {body}"
        return out or "0"


def _nonzero(s: IntSeries, order: int) -> list[tuple[int, int]]:
    return [(i, c) for i, c in enumerate(s.coeffs[: order + 1]) if c]


def series_mul(a: IntSeries, b: IntSeries, order: int) -> IntSeries:
    """Cauchy product truncated at ``order``.

    The loop runs over the nonzero terms of the sparser operand, so products
    with the (very sparse) pentagonal series stay cheap. Accumulation is in
    unbounded ints; only the finished coefficients are range-checked.
    """
    _order(order)
    sa, sb = _nonzero(a, order), _nonzero(b, order)
    if len(sb) < len(sa):
        sa, sb = sb, sa
    acc = [0] * (order + 1)
    for i, ai in sa:
        for j, bj in sb:
            k = i + j
            if k > order:
                break
            acc[k] += ai * bj
    return IntSeries(order, tuple(acc))


def series_div(num: IntSeries, den: IntSeries, order: int) -> IntSeries:
    """q with q * den == num up to ``order``; den_0 must be +1 or -1."""
    _order(order)
    d0 = den[0]
    if d0 not in (1, -1):
        raise DomainError(f"constant term of the divisor must be +1 or -1, got {d0}")
    tail = [(k, c) for k, c in _nonzero(den, order) if k > 0]
    q = [0] * (order + 1)
    for n in range(order + 1):
        acc = num[n]
        for k, c in tail:
            if k > n:
                break
            acc -= c * q[n - k]
        # d0 is a unit, so this division is exact
        q[n] = checked_signed(acc * d0, what=f"quotient coefficient {n}")
    return IntSeries(order, tuple(q))


def euler_product(order: int) -> IntSeries:
    """(1 - x)(1 - x^2)...(1 - x^order), truncated at ``order``.

    Factors with k > order only touch coefficients beyond the truncation.
    """
    _order(order)
    c = [0] * (order + 1)
    c[0] = 1
    for k in range(1, order + 1):
        # in-place multiply by (1 - x^k); descending i reads un-updated entries
        for i in range(order, k - 1, -1):
            c[i] -= c[i - k]
    assert all(v in (-1, 0, 1) for v in c), "product coefficients must lie in {-1, 0, 1}"
    return IntSeries(order, tuple(c))


def pentagonal_series(order: int) -> IntSeries:
    """1 - x - x^2 + x^5 + x^7 - x^12 - x^15 + ...: coefficient (-1)^j at gpent(j)."""
    _order(order)
    c = [0] * (order + 1)
    c[0] = 1
    for g in gpent_sequence(order):
        c[g.value] = -g.sign
    return IntSeries(order, tuple(c))


def pentagonal_numerator(order: int) -> IntSeries:
    """x + 2x^2 - 5x^5 - 7x^7 + 12x^12 + ...: each pentagonal v weighted by v and its recurrence sign."""
    _order(order)
    c = [0] * (order + 1)
    for g in gpent_sequence(order):
        c[g.value] = g.sign * g.value
    return IntSeries(order, tuple(c))


def log_derivative_sigma(order: int) -> IntSeries:
    """-x s'/s for s the pentagonal series; coefficient n is σ(n)."""
    return series_div(pentagonal_numerator(order), pentagonal_series(order), order)


def lambert_sigma(order: int) -> IntSeries:
    """sum_k k x^k / (1 - x^k), expanded by adding k at every multiple of k."""
    _order(order)
    c = [0] * (order + 1)
    for k in range(1, order + 1):
        for m in range(k, order + 1, k):
            c[m] += k
    return IntSeries(order, tuple(c))


def coefficient_cancellation_check(order: int) -> bool:
    """Whether lambert_sigma * pentagonal_series == pentagonal_numerator through ``order``."""
    lhs = series_mul(lambert_sigma(order), pentagonal_series(order), order)
    return lhs == pentagonal_numerator(order)
