"""Sum-of-divisors tables computed three independent ways and cross-checked."""

from divsum.core import (
    Classification,
    Factorization,
    Kind,
    amicable_pairs,
    classify,
    divisors,
    factorize,
    is_amicable_pair,
    sigma,
    sigma_factored,
    sigma_table_factored,
    sigma_table_sieve,
    sigma_trial,
)
from divsum.natural import CapacityError, ContractError, DomainError, NaturalOverflowError, SigmaError
from divsum.pentagonal import GPentTerm, gpent, gpent_sequence, is_gpent
from divsum.recurrence import (
    RecurrenceTrace,
    TermKind,
    TraceTerm,
    build_sigma_table_recurrence,
    explain,
    sigma_next,
    sigma_recurrence,
)
from divsum.series import (
    IntSeries,
    coefficient_cancellation_check,
    euler_product,
    lambert_sigma,
    log_derivative_sigma,
    pentagonal_numerator,
    pentagonal_series,
    series_div,
    series_mul,
)
from divsum.table import Provenance, SigmaTable

__version__ = "0.1.0"
