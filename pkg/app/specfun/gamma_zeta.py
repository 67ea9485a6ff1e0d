"""
Gamma, Riemann zeta, 완비 zeta ξ 계산 모듈

- Γ: Lanczos 근사 (g=7, 9항), Re s < 0.5 에서는 반사 공식
- ζ: Euler-Maclaurin 합 (보정 급수의 해석적 연속으로 s ≠ 1 전체에서 유효)
- ξ(s) = π^{-s/2} Γ(s/2) ζ(s)

큰 인자에서 넘침을 피하기 위해 log 버전을 함께 제공한다.
"""

from fractions import Fraction
from functools import lru_cache
import cmath
import math

import numpy as np

from app.config import DEFAULT_PRECISION, Precision
from app.errors import PoleError


_LANCZOS_G = 7
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_2PI = 0.5 * math.log(2 * math.pi)
_LOG_PI = math.log(math.pi)


def _nonpositive_integer(z: complex) -> bool:
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def _lanczos_log(z: complex) -> complex:
    """Re z ≥ 0.5 에서 log Γ(z)"""
    z = z - 1
    series = _LANCZOS_COEFFS[0]
    for k, coeff in enumerate(_LANCZOS_COEFFS[1:], start=1):
        series += coeff / (z + k)
    t = z + _LANCZOS_G + 0.5
    return _LOG_SQRT_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(series)


def log_gamma_fn(s: complex) -> complex:
    """log Γ(s) (허수부는 2πi 배수만큼의 가지 선택을 보장하지 않음)"""
    s = complex(s)
    if _nonpositive_integer(s):
        raise PoleError(f"Γ의 극점입니다: s={s.real:g}", pole=s)
    if s.real < 0.5:
        return _LOG_PI - cmath.log(cmath.sin(math.pi * s)) - _lanczos_log(1 - s)
    return _lanczos_log(s)


def gamma_fn(s: complex) -> complex:
    s = complex(s)
    if _nonpositive_integer(s):
        raise PoleError(f"Γ의 극점입니다: s={s.real:g}", pole=s)
    if s.real < 0.5:
        return math.pi / (cmath.sin(math.pi * s) * gamma_fn(1 - s))
    return cmath.exp(_lanczos_log(s))


@lru_cache(maxsize=8)
def bernoulli_numbers(count: int) -> tuple[Fraction, ...]:
    """B₀ … B_count (Akiyama-Tanigawa, B₁ = +1/2 규약)"""
    work = [Fraction(0)] * (count + 1)
    numbers = []
    for m in range(count + 1):
        work[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            work[j - 1] = j * (work[j - 1] - work[j])
        numbers.append(work[0])
    return tuple(numbers)


@lru_cache(maxsize=8)
def _em_coefficients(M: int) -> tuple[float, ...]:
    """B_{2k}/(2k)! (k = 1..M)"""
    bern = bernoulli_numbers(2 * M)
    return tuple(float(bern[2 * k] / math.factorial(2 * k)) for k in range(1, M + 1))


def zeta_fn(s: complex, precision: Precision = DEFAULT_PRECISION) -> complex:
    s = complex(s)
    if s == 1:
        raise PoleError("ζ의 극점입니다: s=1", pole=s)

    N, M = precision.euler_maclaurin_N, precision.euler_maclaurin_M
    if s.real < 0:
        # 직접합의 상쇄 오차가 N^{1-Re s} 로 커지므로 구간을 줄인다
        N = min(N, max(6, math.ceil(abs(s)) + 2))
    log_n = np.log(np.arange(1, N, dtype=float))
    direct = complex(np.sum(np.exp(-s * log_n)))
    log_N = math.log(N)
    tail = cmath.exp((1 - s) * log_N) / (s - 1) + 0.5 * cmath.exp(-s * log_N)

    # 큰 Re s 에서 보정항은 무시할 만큼 작고 Pochhammer 곱은 넘친다
    if s.real > N:
        return direct + tail

    correction = 0j
    term = s * cmath.exp(-(s + 1) * log_N)
    for k, coeff in enumerate(_em_coefficients(M), start=1):
        if k > 1:
            term *= (s + 2 * k - 3) * (s + 2 * k - 2) / (N * N)
        correction += coeff * term
    return direct + tail + correction


# 이보다 왼쪽에서는 ξ(s) = ξ(1-s) 로 옮겨 Euler-Maclaurin 직접합의 넘침을 피한다
_XI_REFLECT_BELOW = -10.0


def _check_xi_pole(s: complex):
    if s == 0 or s == 1:
        raise PoleError(f"ξ의 극점입니다: s={s.real:g}", pole=s)


def _trivial_zero(s: complex) -> bool:
    """Γ(s/2)의 극과 ζ의 자명한 영점이 상쇄되는 s = -2, -4, …"""
    return _nonpositive_integer(s) and s.real < 0 and int(s.real) % 2 == 0


def xi(s: complex, precision: Precision = DEFAULT_PRECISION) -> complex:
    s = complex(s)
    _check_xi_pole(s)
    if _trivial_zero(s) or s.real < _XI_REFLECT_BELOW:
        return xi(1 - s, precision)
    return cmath.exp(-0.5 * s * _LOG_PI) * gamma_fn(s / 2) * zeta_fn(s, precision)


def log_xi(s: complex, precision: Precision = DEFAULT_PRECISION) -> complex:
    s = complex(s)
    _check_xi_pole(s)
    if _trivial_zero(s) or s.real < _XI_REFLECT_BELOW:
        return log_xi(1 - s, precision)
    return -0.5 * s * _LOG_PI + log_gamma_fn(s / 2) + cmath.log(zeta_fn(s, precision))


def xi_ratio(x: complex, precision: Precision = DEFAULT_PRECISION) -> complex:
    """ξ(-x)/ξ(1-x), c-함수의 인자 하나"""
    x = complex(x)
    return cmath.exp(log_xi(-x, precision) - log_xi(1 - x, precision))
