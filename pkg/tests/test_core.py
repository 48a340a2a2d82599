import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divsum import (
    ContractError,
    DomainError,
    Factorization,
    Kind,
    NaturalOverflowError,
    Provenance,
    amicable_pairs,
    classify,
    divisors,
    factorize,
    is_amicable_pair,
    sigma_factored,
    sigma_table_factored,
    sigma_table_sieve,
    sigma_trial,
)
from divsum.core import prime_power_sigma
from divsum.natural import U64_MAX
from divsum.reference import SIGMA_1_TO_100
from oracle import brute_is_prime, brute_sigma


@pytest.mark.parametrize(
    "n, factors",
    [
        (360, ((2, 3), (3, 2), (5, 1))),
        (1, ()),
        (101, ((101, 1),)),
        (2, ((2, 1),)),
        (49, ((7, 2),)),
        (35, ((5, 1), (7, 1))),
        (U64_MAX, ((3, 1), (5, 1), (17, 1), (257, 1), (641, 1), (65537, 1), (6700417, 1))),
    ],
)
def test_factorize_examples(n, factors):
    f = factorize(n)
    assert f.factors == factors
    assert f.subject == n


def test_factorize_rejects_zero():
    with pytest.raises(DomainError):
        factorize(0)


def test_factorize_rejects_out_of_range():
    with pytest.raises(NaturalOverflowError):
        factorize(U64_MAX + 1)


def test_remultiplication_up_to_1e5():
    for n in range(1, 100_001):
        f = factorize(n)
        assert math.prod(p**e for p, e in f.factors) == n


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=10**10))
def test_factorization_invariants(n):
    f = factorize(n)
    primes = [p for p, _ in f.factors]
    assert primes == sorted(set(primes))
    assert all(brute_is_prime(p) for p in primes if p < 10**4)
    assert all(e >= 1 for _, e in f.factors)
    assert math.prod(p**e for p, e in f.factors) == n


def test_factorization_validates_itself():
    with pytest.raises(ContractError):
        Factorization(12, ((3, 1), (2, 2)))
    with pytest.raises(ContractError):
        Factorization(12, ((2, 1), (3, 1)))


@pytest.mark.parametrize("n, expected", [(360, 1170), (1, 1), (100, 217), (20, 42), (12, 28)])
def test_sigma_factored_examples(n, expected):
    assert sigma_factored(factorize(n)) == expected


def test_prime_power_closed_form():
    for p in (2, 3, 5, 7, 101):
        for e in range(0, 8):
            assert prime_power_sigma(p, e) == sum(p**i for i in range(e + 1))


def test_sigma_factored_overflow():
    # 2^63 fits, but sigma(2^63) = 2^64 - 1 is the last value that does
    assert sigma_factored(factorize(2**63)) == U64_MAX
    with pytest.raises(NaturalOverflowError):
        sigma_factored(factorize(U64_MAX))


@pytest.mark.parametrize("n, expected", [(12, 28), (1, 1), (20, 42), (16, 31), (10, 18)])
def test_sigma_trial_examples(n, expected):
    assert sigma_trial(n) == expected


def test_sigma_trial_domain():
    with pytest.raises(DomainError):
        sigma_trial(0)
    with pytest.raises(DomainError):
        sigma_trial(-3)
    with pytest.raises(DomainError):
        sigma_trial(True)


def test_sigma_trial_matches_brute_force():
    for n in range(1, 1001):
        assert sigma_trial(n) == brute_sigma(n)


@pytest.mark.parametrize("n, expected", [(10, [1, 2, 5, 10]), (1, [1]), (16, [1, 2, 4, 8, 16]), (36, [1, 2, 3, 4, 6, 9, 12, 18, 36])])
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


def test_divisors_zero():
    with pytest.raises(DomainError):
        divisors(0)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=10**7))
def test_divisor_list_properties(n):
    ds = divisors(n)
    assert ds[0] == 1 and ds[-1] == n
    assert all(a < b for a, b in zip(ds, ds[1:]))
    assert all(n % d == 0 for d in ds)
    assert sum(ds) == sigma_trial(n)


@pytest.mark.parametrize(
    "n, kind, sigma",
    [
        (6, Kind.PERFECT, 12),
        (101, Kind.PRIME, 102),
        (12, Kind.ABUNDANT, 28),
        (1, Kind.UNIT, 1),
        (9, Kind.DEFICIENT, 13),
        (2, Kind.PRIME, 3),
        (28, Kind.PERFECT, 56),
    ],
)
def test_classify_examples(n, kind, sigma):
    c = classify(n)
    assert c.kind is kind
    assert c.sigma == sigma


def test_classify_zero():
    with pytest.raises(DomainError):
        classify(0)


def test_classification_trichotomy():
    for n in range(1, 3001):
        s = brute_sigma(n)
        kind = classify(n).kind
        expected = {
            Kind.UNIT: n == 1,
            Kind.PRIME: n >= 2 and s == n + 1,
            Kind.PERFECT: s == 2 * n,
            Kind.ABUNDANT: s > 2 * n,
            Kind.DEFICIENT: n >= 2 and s < 2 * n and s != n + 1,
        }
        assert [k for k, holds in expected.items() if holds] == [kind]
        assert (kind is Kind.PRIME) == brute_is_prime(n)


def test_perfect_numbers_below_10000():
    assert [n for n in range(1, 10_001) if classify(n).kind is Kind.PERFECT] == [6, 28, 496, 8128]


@pytest.mark.parametrize("m, n", [(220, 284), (284, 220), (1184, 1210)])
def test_amicable_pairs_true(m, n):
    assert is_amicable_pair(m, n) is True


@pytest.mark.parametrize("m, n", [(6, 6), (220, 285), (28, 28), (220, 220)])
def test_amicable_pairs_false(m, n):
    assert is_amicable_pair(m, n) is False


def test_amicable_domain():
    with pytest.raises(DomainError):
        is_amicable_pair(1, 220)


@pytest.mark.parametrize(
    "n_max, expected",
    [(300, [(220, 284)]), (100, []), (1300, [(220, 284), (1184, 1210)]), (2, [])],
)
def test_amicable_scan(n_max, expected):
    assert amicable_pairs(n_max) == expected


def test_sieve_examples():
    assert sigma_table_sieve(10).tolist() == [1, 3, 4, 7, 6, 12, 8, 15, 13, 18]
    assert sigma_table_sieve(1).tolist() == [1]
    t = sigma_table_sieve(100)
    assert t[100] == 217
    assert t.tolist() == list(SIGMA_1_TO_100)
    assert t.provenance is Provenance.SIEVE


def test_oracle_agreement_up_to_1e4():
    sieve = sigma_table_sieve(10_000)
    for n in range(1, 10_001):
        s = sigma_trial(n)
        assert sigma_factored(factorize(n)) == s
        assert sieve[n] == s


def test_factored_table_matches_sieve():
    t = sigma_table_factored(3000)
    assert t.provenance is Provenance.FACTORIZED
    assert t.matches(sigma_table_sieve(3000))


def test_multiplicativity_small_coprime_pairs():
    for p in range(1, 301):
        for q in range(p, 301):
            if math.gcd(p, q) == 1:
                assert sigma_trial(p * q) == sigma_trial(p) * sigma_trial(q)


def test_multiplicativity_needs_coprimality():
    assert sigma_trial(4) == 7
    assert sigma_trial(2) ** 2 == 9
    assert sigma_trial(4) != sigma_trial(2) ** 2


def test_multiplicativity_random_pairs():
    rng = random.Random(20240601)
    for _ in range(300):
        p, q = rng.randint(1, 10**5), rng.randint(1, 10**5)
        if math.gcd(p, q) == 1:
            assert sigma_factored(factorize(p * q)) == sigma_trial(p) * sigma_trial(q)
