import math

import pytest


def trial_division_is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def primes_between(lo, hi):
    return [n for n in range(lo, hi + 1) if trial_division_is_prime(n)]


@pytest.fixture(scope="session")
def primes_to_2000():
    return primes_between(2, 2000)
