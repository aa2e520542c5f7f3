from math import gcd

import pytest
from hypothesis import given, strategies as st

from vrc.numtheory import divisors, factorize, is_prime, partitions, tau, totient, units


def gcd_count(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def trial_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def explicit_partitions(n, largest=None):
    """All partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for k in range(min(n, largest), 0, -1):
        out += [(k,) + rest for rest in explicit_partitions(n - k, k)]
    return out


@pytest.mark.parametrize("n, expected", [(1, 1), (12, 4), (9, 6)])
def test_totient_examples(n, expected):
    assert totient(n) == expected == gcd_count(n)


@pytest.mark.parametrize("n, expected", [(1, [1]), (12, [1, 2, 3, 4, 6, 12]), (7, [1, 7])])
def test_divisors_examples(n, expected):
    assert divisors(n) == expected == trial_divisors(n)


@pytest.mark.parametrize("n, expected", [(1, 1), (12, 6), (16, 5)])
def test_tau_examples(n, expected):
    assert tau(n) == expected


@pytest.mark.parametrize("n, expected", [(0, 1), (4, 5), (6, 11)])
def test_partitions_examples(n, expected):
    assert partitions(n) == expected == len(explicit_partitions(n))


@pytest.mark.parametrize("fn", [totient, divisors, tau, factorize, units])
def test_rejects_zero(fn):
    with pytest.raises(ValueError):
        fn(0)


def test_partitions_rejects_negative():
    with pytest.raises(ValueError):
        partitions(-1)


def test_overflow_is_checked():
    with pytest.raises(OverflowError):
        totient(2**63)
    with pytest.raises(OverflowError):
        partitions(500)


def test_totient_sums_over_divisors():
    for n in range(1, 501):
        assert sum(totient(d) for d in divisors(n)) == n


def test_tau_is_divisor_count():
    for n in range(1, 501):
        assert tau(n) == len(divisors(n)) == len(trial_divisors(n))


def test_partitions_match_enumeration():
    for n in range(21):
        assert partitions(n) == len(explicit_partitions(n))


@given(st.integers(1, 200), st.integers(1, 200))
def test_totient_multiplicative(a, b):
    if gcd(a, b) == 1:
        assert totient(a * b) == totient(a) * totient(b)


def test_units_and_primes():
    assert units(1) == [0]
    assert units(8) == [1, 3, 5, 7]
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
