"""Exact integer helpers: totient, divisors, divisor count, partitions.

Everything stays in machine-word range; results that would not fit in a
signed 64-bit integer raise OverflowError instead of growing silently.
"""

from math import gcd

INT64_MAX = 2**63 - 1


def _check_range(value: int) -> int:
    if value > INT64_MAX:
        raise OverflowError(f"{value} exceeds the 64-bit range")
    return value


def _positive(n: int) -> int:
    n = int(n)
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    return _check_range(n)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n by trial division, as {prime: exponent}."""
    n = _positive(n)
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def totient(n: int) -> int:
    """Euler's phi: the number of 1 <= k <= n coprime to n."""
    result = _positive(n)
    for p in factorize(n):
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    """Positive divisors of n in ascending order."""
    n = _positive(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def tau(n: int) -> int:
    """Number of positive divisors of n."""
    return len(divisors(n))


def partitions(n: int) -> int:
    """The partition number p(n), via Euler's pentagonal-number recurrence."""
    n = int(n)
    if n < 0:
        raise ValueError(f"expected a nonnegative integer, got {n}")
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = _check_range(total)
    return p[n]


def units(n: int) -> list[int]:
    """Residues 0 <= u < n with gcd(u, n) = 1; for n = 1 this is [0]."""
    n = _positive(n)
    return [u for u in range(n) if gcd(u, n) == 1]


def is_prime(n: int) -> bool:
    n = int(n)
    return n >= 2 and factorize(n) == {n: 1}
