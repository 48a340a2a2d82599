"""Dense, immutable σ tables shared by the sieve, factorization and recurrence builders."""

from __future__ import annotations

import enum
import math
from collections.abc import Iterator, Sequence

import numpy as np

from divsum.natural import CapacityError, ContractError, DomainError, NaturalOverflowError, natural

# Hard ceiling on table length; 8 bytes per entry puts this at 400 MB.
MAX_TABLE_N = 50_000_000


class Provenance(str, enum.Enum):
    SIEVE = "sieve"
    RECURRENCE = "recurrence"
    FACTORIZED = "factorized"


def check_table_size(n_max: int) -> int:
    """Validate a requested table length and reject ones that cannot be built.

    σ(n) <= n * H(n) <= n * (1 + ln n), so the whole table fits 64 bits
    whenever that bound does.
    """
    natural(n_max, name="N", minimum=1)
    if n_max > MAX_TABLE_N:
        raise CapacityError(f"N={n_max} exceeds the table capacity of {MAX_TABLE_N}")
    if n_max * (1 + math.log(n_max)) >= 2**64:
        raise NaturalOverflowError(f"sigma values up to N={n_max} may exceed 64 bits")
    return n_max


def allocate(size: int, dtype=np.uint64) -> np.ndarray:
    try:
        return np.zeros(size, dtype=dtype)
    except MemoryError as exc:
        raise CapacityError(f"cannot allocate a table of {size} entries") from exc


class SigmaTable:
    """σ(1..max_n) as a read-only uint64 array, indexed from 1.

    ``table[n]`` returns σ(n) as a Python int. The producing algorithm is kept
    in ``provenance`` so mixed-up tables are easy to spot in reports.
    """

    __slots__ = ("_values", "provenance")

    def __init__(self, values: np.ndarray | Sequence[int], provenance: Provenance):
        arr = np.array(values, dtype=np.uint64, copy=True)
        if arr.ndim != 1:
            raise ContractError("sigma table values must be one-dimensional")
        if arr.size and int(arr[0]) != 1:
            raise ContractError(f"sigma(1) must be 1, got {int(arr[0])}")
        arr.setflags(write=False)
        self._values = arr
        self.provenance = Provenance(provenance)

    @classmethod
    def empty(cls, provenance: Provenance = Provenance.RECURRENCE) -> SigmaTable:
        """The table with max_n = 0, used as the prefix when computing σ(1)."""
        return cls(np.zeros(0, dtype=np.uint64), provenance)

    @property
    def max_n(self) -> int:
        return int(self._values.size)

    @property
    def values(self) -> np.ndarray:
        return self._values

    def __len__(self) -> int:
        return self.max_n

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.max_n:
            raise DomainError(f"index {n} outside 1..{self.max_n}")
        return int(self._values[n - 1])

    def __iter__(self) -> Iterator[int]:
        return iter(self.tolist())

    def tolist(self) -> list[int]:
        return [int(v) for v in self._values.tolist()]

    def checksum(self) -> int:
        """Sum of all entries modulo 2**64."""
        return int(self._values.sum(dtype=np.uint64))

    def first_mismatch(self, other: SigmaTable) -> int | None:
        """Smallest n where the two tables differ, or None when pointwise equal."""
        if self.max_n != other.max_n:
            return min(self.max_n, other.max_n) + 1
        diff = np.flatnonzero(self._values != other._values)
        return int(diff[0]) + 1 if diff.size else None

    def matches(self, other: SigmaTable) -> bool:
        return self.first_mismatch(other) is None

    def __repr__(self) -> str:
        return f"SigmaTable(max_n={self.max_n}, provenance={self.provenance.value})"
