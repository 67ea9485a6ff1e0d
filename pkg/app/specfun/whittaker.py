"""
SL₂ Whittaker 인자 모듈

W^∞_n(y, s) = 2π^{s/2} Γ(s/2)^{-1} |ny|^{(s-1)/2} K_{(s-1)/2}(2π|n|y)
W^p_n(s)    = (1 - p^{-s})(1 - p^{(n_p+1)(1-s)}) / (1 - p^{1-s})
W_n(y, s)   = 2 σ_{1-s}(|n|) |ny|^{(s-1)/2} K_{(s-1)/2}(2π|n|y) / ξ(s)

모두 Re s > 1 에서만 정의하고 그 밖은 외삽하지 않고 거부한다.
"""

import cmath
import math

import numpy as np
from scipy import integrate

from app.config import DEFAULT_PRECISION, Precision
from app.errors import DomainError
from app.specfun.arith import divisor_power_sum, is_prime, p_adic_valuation, primes_up_to
from app.specfun.bessel import log_bessel_k
from app.specfun.gamma_zeta import log_gamma_fn, log_xi


_LOG_2 = math.log(2)
_LOG_PI = math.log(math.pi)


def _check_args(n: int, y: float, s: complex):
    if n == 0:
        raise DomainError("n은 0이 아니어야 합니다", n=n)
    if not y > 0:
        raise DomainError(f"y는 양수여야 합니다: {y}", y=y)
    if not s.real > 1:
        raise DomainError(f"Re s > 1 이어야 합니다: s={s}", s=s)


def log_whittaker_inf(n: int, y: float, s: complex, precision: Precision = DEFAULT_PRECISION) -> complex:
    s = complex(s)
    _check_args(n, y, s)
    return (
        _LOG_2
        + 0.5 * s * _LOG_PI
        - log_gamma_fn(s / 2)
        + 0.5 * (s - 1) * math.log(abs(n) * y)
        + log_bessel_k((s - 1) / 2, 2 * math.pi * abs(n) * y, precision)
    )


def whittaker_inf(n: int, y: float, s: complex, precision: Precision = DEFAULT_PRECISION) -> complex:
    return cmath.exp(log_whittaker_inf(n, y, s, precision))


def whittaker_inf_quadrature(n: int, y: float, s: complex) -> complex:
    """
    ∫_ℝ (1+x²)^{-s/2} e^{-2πinyx} dx 를 QUADPACK Fourier 적분(QAWF)으로 직접 계산

    닫힌 꼴과 독립적인 검증용 경로.
    """
    s = complex(s)
    _check_args(n, y, s)
    omega = 2 * math.pi * abs(n) * y
    sigma, tau = s.real, s.imag

    def real_part(x: float) -> float:
        log_r = math.log1p(x * x)
        return math.exp(-0.5 * sigma * log_r) * math.cos(0.5 * tau * log_r)

    def imag_part(x: float) -> float:
        log_r = math.log1p(x * x)
        return -math.exp(-0.5 * sigma * log_r) * math.sin(0.5 * tau * log_r)

    re, _ = integrate.quad(real_part, 0, np.inf, weight="cos", wvar=omega, epsabs=1e-13, limlst=100)
    im = 0.0
    if tau:
        im, _ = integrate.quad(imag_part, 0, np.inf, weight="cos", wvar=omega, epsabs=1e-13, limlst=100)
    # 피적분함수가 x 에 대해 짝함수라 사인 성분은 사라진다
    return complex(2 * re, 2 * im)


def whittaker_p(p: int, n: int, s: complex) -> complex:
    s = complex(s)
    if not is_prime(p):
        raise DomainError(f"p는 소수여야 합니다: {p}", p=p)
    if n == 0:
        raise DomainError("n은 0이 아니어야 합니다", n=n)
    if not s.real > 1:
        raise DomainError(f"Re s > 1 이어야 합니다: s={s}", s=s)
    n_p = p_adic_valuation(p, n)
    log_p = math.log(p)
    return (
        (1 - cmath.exp(-s * log_p))
        * (1 - cmath.exp((n_p + 1) * (1 - s) * log_p))
        / (1 - cmath.exp((1 - s) * log_p))
    )


def euler_product_whittaker(n: int, s: complex, limit: int) -> complex:
    """Π_{p ≤ limit} W^p_n(s), P → ∞ 에서 σ_{1-s}(|n|)/ζ(s) 로 수렴"""
    product = 1 + 0j
    for p in primes_up_to(limit):
        product *= whittaker_p(p, n, s)
    return product


def log_whittaker_global(n: int, y: float, s: complex, precision: Precision = DEFAULT_PRECISION) -> complex:
    s = complex(s)
    _check_args(n, y, s)
    return (
        _LOG_2
        + cmath.log(divisor_power_sum(1 - s, abs(n)))
        + 0.5 * (s - 1) * math.log(abs(n) * y)
        + log_bessel_k((s - 1) / 2, 2 * math.pi * abs(n) * y, precision)
        - log_xi(s, precision)
    )


def whittaker_global(n: int, y: float, s: complex, precision: Precision = DEFAULT_PRECISION) -> complex:
    return cmath.exp(log_whittaker_global(n, y, s, precision))
