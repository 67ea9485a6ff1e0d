"""
산술 함수: 약수 거듭제곱합, p진 값매김, 소수 체
"""

from functools import lru_cache
import cmath
import math

import numpy as np

from app.errors import DomainError


def divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def divisor_power_sum(s: complex, n: int) -> complex:
    """σ_s(n) = Σ_{d|n} d^s"""
    if n <= 0:
        raise DomainError(f"n은 양의 정수여야 합니다: {n}", n=n)
    s = complex(s)
    return sum(cmath.exp(s * math.log(d)) for d in divisors(n))


def p_adic_valuation(p: int, n: int) -> int:
    n = abs(n)
    if n == 0:
        raise DomainError("0의 p진 값매김은 정의되지 않습니다", p=p)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


@lru_cache(maxsize=8)
def primes_up_to(limit: int) -> tuple[int, ...]:
    """에라토스테네스 체"""
    if limit < 2:
        return ()
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return tuple(int(p) for p in np.flatnonzero(sieve))
