"""
정수열 A_n, B_n 모듈

A₀ = 0, A₁ = 1, A_{n+2} = mA_{n+1} - A_n + 1
B_n = A_n - A_{n-1} (n ≥ 1), B₀ = 0
"""

from dataclasses import dataclass
from functools import lru_cache

from app.errors import InvalidIndex


@dataclass(frozen=True)
class SeqCache:
    """(m, 크기)별로 한 번 계산되는 A, B 테이블"""

    m: int
    A: tuple[int, ...]
    B: tuple[int, ...]

    @classmethod
    def build(cls, m: int, size: int) -> "SeqCache":
        A = [0, 1]
        while len(A) < size:
            A.append(m * A[-1] - A[-2] + 1)
        B = [0] + [A[k] - A[k - 1] for k in range(1, len(A))]
        return cls(m=m, A=tuple(A), B=tuple(B))


@lru_cache(maxsize=64)
def seq_cache(m: int, size: int = 128) -> SeqCache:
    return SeqCache.build(m, size)


def _table(m: int, n: int) -> SeqCache:
    if n < 0:
        raise InvalidIndex(f"인덱스는 0 이상이어야 합니다: {n}", n=n)
    size = 128
    while size <= n:
        size *= 2
    return seq_cache(m, size)


def seq_A(m: int, n: int) -> int:
    return _table(m, n).A[n]


def seq_B(m: int, n: int) -> int:
    return _table(m, n).B[n]


def seq_A_closed(gamma: float, n: int) -> float:
    """A_n = (γ^{2n+1} - γⁿ(1+γ) + 1) / (γ^{n-1}(γ+1)(γ-1)²)"""
    return (gamma ** (2 * n + 1) - gamma ** n * (1 + gamma) + 1) / (
        gamma ** (n - 1) * (gamma + 1) * (gamma - 1) ** 2
    )


def seq_B_closed(gamma: float, n: int) -> float:
    """B_n = (γ^{2n} - 1) / (γ^{n-1}(γ² - 1))"""
    return (gamma ** (2 * n) - 1) / (gamma ** (n - 1) * (gamma * gamma - 1))
