"""Named cross-checks behind the ``verify`` subcommand."""

from __future__ import annotations

from dataclasses import dataclass

from divsum import core, recurrence, series
from divsum.reference import SIGMA_1_TO_100

CHECKS = ("table100", "pentagonal", "sigma-equivalence", "cancellation")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    compared: int
    mismatch: str | None = None

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        line = f"{self.name}: {status} ({self.compared} compared)"
        if self.mismatch:
            line += f"; first mismatch: {self.mismatch}"
        return line


def _first_diff(name: str, compared: int, pairs) -> CheckResult:
    for index, expected, got, label in pairs:
        if expected != got:
            return CheckResult(name, False, compared, f"index {index} {label}: expected {expected}, got {got}")
    return CheckResult(name, True, compared)


def check_table100() -> CheckResult:
    """Factorization, sieve and recurrence each reproduce the 100-entry reference table."""
    routes = {
        "factor": [core.sigma(n) for n in range(1, 101)],
        "sieve": core.sigma_table_sieve(100).tolist(),
        "recurrence": recurrence.build_sigma_table_recurrence(100).tolist(),
    }
    pairs = (
        (n, SIGMA_1_TO_100[n - 1], values[n - 1], f"({route})")
        for route, values in routes.items()
        for n in range(1, 101)
    )
    return _first_diff("table100", 100 * len(routes), pairs)


def check_pentagonal(order: int) -> CheckResult:
    product = series.euler_product(order)
    target = series.pentagonal_series(order)
    pairs = ((i, target[i], product[i], "(product vs pentagonal series)") for i in range(order + 1))
    return _first_diff("pentagonal", order + 1, pairs)


def check_sigma_equivalence(order: int) -> CheckResult:
    quotient = series.log_derivative_sigma(order)
    lambert = series.lambert_sigma(order)
    sieve = core.sigma_table_sieve(order).tolist() if order >= 1 else []

    def pairs():
        for n in range(1, order + 1):
            yield n, sieve[n - 1], quotient[n], "(quotient vs sieve)"
            yield n, sieve[n - 1], lambert[n], "(lambert vs sieve)"

    return _first_diff("sigma-equivalence", order, pairs())


def check_cancellation(order: int) -> CheckResult:
    lhs = series.series_mul(series.lambert_sigma(order), series.pentagonal_series(order), order)
    rhs = series.pentagonal_numerator(order)
    pairs = ((i, rhs[i], lhs[i], "(lambert * pentagonal vs numerator)") for i in range(order + 1))
    return _first_diff("cancellation", order + 1, pairs)


def run_check(name: str, order: int) -> CheckResult:
    if name == "table100":
        return check_table100()
    if name == "pentagonal":
        return check_pentagonal(order)
    if name == "sigma-equivalence":
        return check_sigma_equivalence(order)
    if name == "cancellation":
        return check_cancellation(order)
    raise ValueError(f"unknown check {name!r}")
