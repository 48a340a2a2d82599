"""Wall-clock comparison of the σ-table builders.

Every method's table is built once and compared pointwise with the others
before any timing starts; a fast wrong answer is not a result.
"""

from __future__ import annotations

import timeit
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from divsum.core import sigma_table_factored, sigma_table_sieve
from divsum.recurrence import build_sigma_table_recurrence
from divsum.table import SigmaTable

BUILDERS: dict[str, Callable[[int], SigmaTable]] = {
    "sieve": sigma_table_sieve,
    "recurrence": build_sigma_table_recurrence,
    "factor": sigma_table_factored,
}


class BenchMismatch(Exception):
    def __init__(self, reference: str, method: str, index: int):
        super().__init__(f"{method} disagrees with {reference} at n={index}")
        self.reference = reference
        self.method = method
        self.index = index


@dataclass(frozen=True)
class BenchRow:
    method: str
    max_n: int
    repeat: int
    best_seconds: float
    checksum: int

    def as_csv(self) -> str:
        return f"{self.method},{self.max_n},{self.repeat},{self.best_seconds:.6f},{self.checksum}"


CSV_HEADER = "method,max_n,repeat,best_seconds,checksum"


def cross_check(n_max: int, methods: Sequence[str]) -> dict[str, SigmaTable]:
    tables = {m: BUILDERS[m](n_max) for m in methods}
    reference = methods[0]
    for m in methods[1:]:
        bad = tables[reference].first_mismatch(tables[m])
        if bad is not None:
            raise BenchMismatch(reference, m, bad)
    return tables


def run_bench(n_max: int, methods: Sequence[str], repeat: int = 3) -> list[BenchRow]:
    unknown = [m for m in methods if m not in BUILDERS]
    if unknown:
        raise ValueError(f"unknown methods: {', '.join(unknown)}")
    if repeat < 1:
        raise ValueError("repeat must be >= 1")
    tables = cross_check(n_max, methods)
    rows = []
    for m in methods:
        builder = BUILDERS[m]
        times = timeit.repeat(lambda: builder(n_max), number=1, repeat=repeat)
        rows.append(BenchRow(m, n_max, repeat, min(times), tables[m].checksum()))
    return rows
