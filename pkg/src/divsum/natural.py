"""Checked fixed-width integer helpers and the package's exception types.

Python integers never wrap, so "checked arithmetic" here means every value
that crosses a public boundary is compared against the 64-bit range and an
error is raised instead of silently growing past it.
"""

from __future__ import annotations

U64_MAX = 2**64 - 1
U128_MAX = 2**128 - 1
I64_MIN = -(2**63)
I64_MAX = 2**63 - 1


class SigmaError(Exception):
    """Base class for every error raised by divsum."""


class DomainError(SigmaError, ValueError):
    """An argument lies outside the domain of the operation (e.g. n = 0)."""


class NaturalOverflowError(SigmaError, OverflowError):
    """A result or intermediate does not fit the fixed integer width."""


class CapacityError(SigmaError, MemoryError):
    """A requested table is larger than this process is willing to allocate."""


class ContractError(SigmaError, ValueError):
    """A caller-supplied structure violates an operation's precondition."""


def natural(value: int, *, name: str = "n", minimum: int = 0) -> int:
    """Validate ``value`` as a 64-bit natural number not below ``minimum``."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {type(value).__name__}")
    if value < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {value}")
    if value > U64_MAX:
        raise NaturalOverflowError(f"{name}={value} exceeds the 64-bit range")
    return value


def checked(value: int, *, what: str = "result", limit: int = U64_MAX) -> int:
    if value < 0 or value > limit:
        raise NaturalOverflowError(f"{what} {value} outside [0, {limit}]")
    return value


def checked_signed(value: int, *, what: str = "coefficient") -> int:
    if value < I64_MIN or value > I64_MAX:
        raise NaturalOverflowError(f"{what} {value} outside the signed 64-bit range")
    return value
