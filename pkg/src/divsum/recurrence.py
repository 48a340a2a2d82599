"""σ(n) from earlier values through the pentagonal recurrence.

    σ(n) = σ(n-1) + σ(n-2) - σ(n-5) - σ(n-7) + σ(n-12) + σ(n-15) - ...

Terms whose argument would be negative are dropped. When the argument is
exactly zero (n itself generalized pentagonal) the term is replaced by n,
keeping its sign.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from divsum.natural import ContractError, checked, natural
from divsum.pentagonal import gpent_sequence
from divsum.table import Provenance, SigmaTable, allocate, check_table_size


class TermKind(str, enum.Enum):
    PRIOR_SIGMA = "prior-sigma"
    SELF_SUBSTITUTION = "self-substitution"


@dataclass(frozen=True)
class TraceTerm:
    offset: int
    sign: int
    contribution: int
    kind: TermKind

    def as_dict(self) -> dict:
        return {
            "offset": self.offset,
            "sign": self.sign,
            "contribution": self.contribution,
            "kind": self.kind.value,
        }


@dataclass(frozen=True)
class RecurrenceTrace:
    n: int
    terms: tuple[TraceTerm, ...]

    @property
    def positive_sum(self) -> int:
        return sum(t.contribution for t in self.terms if t.sign > 0)

    @property
    def negative_sum(self) -> int:
        return sum(t.contribution for t in self.terms if t.sign < 0)

    @property
    def total(self) -> int:
        return self.positive_sum - self.negative_sum

    def pair_sums(self) -> list[int]:
        """Signed sums of consecutive same-sign pairs (terms come in ++--++ order)."""
        out = []
        for i in range(0, len(self.terms), 2):
            pair = self.terms[i : i + 2]
            out.append(pair[0].sign * sum(t.contribution for t in pair))
        return out

    def arguments(self) -> list[int]:
        """The argument of each σ term, with 0 standing for the self-substituted n."""
        return [self.n - t.offset for t in self.terms]


def sigma_next(prefix: SigmaTable, n: int) -> tuple[int, RecurrenceTrace]:
    """Compute σ(n) from a table holding at least σ(1..n-1)."""
    natural(n, minimum=1)
    if prefix.max_n < n - 1:
        raise ContractError(f"prefix holds sigma(1..{prefix.max_n}); sigma(1..{n - 1}) is required")
    terms = []
    for g in gpent_sequence(n):
        if g.value == n:
            terms.append(TraceTerm(g.value, g.sign, n, TermKind.SELF_SUBSTITUTION))
        else:
            terms.append(TraceTerm(g.value, g.sign, prefix[n - g.value], TermKind.PRIOR_SIGMA))
    trace = RecurrenceTrace(n, tuple(terms))
    # Positive and negative parts are summed separately, as in a hand tableau.
    total = trace.total
    if total < 1:
        raise ContractError(f"recurrence produced {total} at n={n}; prefix is not a sigma table")
    return checked(total, what=f"sigma({n})"), trace


def build_sigma_table_recurrence(n_max: int) -> SigmaTable:
    """σ(1..n_max), each entry from its predecessors by the recurrence.

    Each step gathers the needed earlier entries with one fancy-index and
    weights them by the ±1 signs. Slot 0 of the working array is set to n
    before step n, which realizes the σ(0) -> n rule without a branch.
    """
    check_table_size(n_max)
    terms = gpent_sequence(n_max)
    offsets = np.array([t.value for t in terms], dtype=np.int64)
    signs = np.array([t.sign for t in terms], dtype=np.int64)
    work = allocate(n_max + 1, dtype=np.int64)
    active = 0
    for n in range(1, n_max + 1):
        while active < len(terms) and offsets[active] <= n:
            active += 1
        work[0] = n
        work[n] = int(work[n - offsets[:active]] @ signs[:active])
    # |partial sums| <= sum of sigma(k) for k < n, far inside int64 at table capacity
    if work[1:].min() < 1:
        raise ContractError("recurrence produced a non-positive entry")
    return SigmaTable(work[1:].astype(np.uint64), Provenance.RECURRENCE)


def sigma_recurrence(n: int) -> int:
    return build_sigma_table_recurrence(n)[n]


def explain(n: int) -> RecurrenceTrace:
    """The trace ``sigma_next`` produces at n, with the prefix built here."""
    natural(n, minimum=1)
    prefix = build_sigma_table_recurrence(n - 1) if n > 1 else SigmaTable.empty()
    return sigma_next(prefix, n)[1]


def _signed(sign: int, text: str, first: bool) -> str:
    if first:
        return text if sign > 0 else f"-{text}"
    return f"+ {text}" if sign > 0 else f"- {text}"


def format_trace(trace: RecurrenceTrace) -> list[str]:
    """Render a trace as the symbolic equation, its numeric form and the partial sums.

    Example for n = 7::

        s(7) = s(6) + s(5) - s(2) - 7
        s(7) = 12 + 6 - 3 - 7
        pairs +18 -10
        positive 18
        negative 10
        s(7) = 18 - 10 = 8
    """
    n = trace.n
    symbolic, numeric = [], []
    for i, t in enumerate(trace.terms):
        label = str(n) if t.kind is TermKind.SELF_SUBSTITUTION else f"s({n - t.offset})"
        symbolic.append(_signed(t.sign, label, i == 0))
        numeric.append(_signed(t.sign, str(t.contribution), i == 0))
    return [
        f"s({n}) = " + " ".join(symbolic),
        f"s({n}) = " + " ".join(numeric),
        "pairs " + " ".join(f"{p:+d}" for p in trace.pair_sums()),
        f"positive {trace.positive_sum}",
        f"negative {trace.negative_sum}",
        f"s({n}) = {trace.positive_sum} - {trace.negative_sum} = {trace.total}",
    ]
