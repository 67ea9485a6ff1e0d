"""
Macdonald K-Bessel 함수

K_s(y) = ½∫₀^∞ e^{-y(t+1/t)/2} t^s dt/t 를 t = e^u 로 치환하면
K_s(y) = ½∫_ℝ e^{-y cosh u + s u} du 가 되고, 피적분함수가 이중지수적으로
감소하므로 사다리꼴 공식이 지수적으로 수렴한다.
큰 차수에서의 넘침과 상쇄를 피하려고 안장점 u* = asinh(Re s / y) 에서
지수를 분리한 뒤 이동된 피적분함수를 적분한다.
"""

from collections.abc import Iterator
import cmath
import math

import numpy as np

from app.config import DEFAULT_PRECISION, Precision
from app.errors import AccuracyError, DomainError


# 안장점 대비 e^{-50} 이하인 구간은 버린다
_TRUNCATION_NATS = 50.0


def _sinh_minus_identity(v: np.ndarray) -> np.ndarray:
    """sinh v - v, 0 근처에서는 급수로 상쇄 오차를 피한다"""
    v2 = v * v
    series = v * v2 / 6 * (1 + v2 / 20 * (1 + v2 / 42 * (1 + v2 / 72)))
    return np.where(np.abs(v) < 0.1, series, np.sinh(v) - v)


def _shifted_exponent(v: np.ndarray, curv: float, sigma: float) -> np.ndarray:
    """Re[E(u*+v) - E(u*)] = -y cosh u*(cosh v - 1) - σ(sinh v - v)"""
    return -curv * 2 * np.sinh(v / 2) ** 2 - sigma * _sinh_minus_identity(v)


def _half_width(curv: float, sigma: float, width: float, direction: float) -> float:
    v = width
    for _ in range(200):
        if _shifted_exponent(np.array([direction * v]), curv, sigma)[0] < -_TRUNCATION_NATS:
            return v
        v *= 2
    return v


def _saddle(order: complex, y: float) -> tuple[float, float, float, complex]:
    """(σ, τ, y cosh u*, E(u*)), K_s = K_{-s} 이므로 Re s ≥ 0 으로 맞춘다"""
    s = complex(order)
    if s.real < 0:
        s = -s
    sigma, tau = s.real, s.imag
    curv = math.hypot(y, sigma)
    u_star = math.asinh(sigma / y)
    return sigma, tau, curv, complex(-curv + sigma * u_star, tau * u_star)


def _trapezoid_sums(sigma: float, tau: float, curv: float) -> Iterator[complex]:
    """간격을 반씩 줄여가며 이동된 피적분함수의 사다리꼴 합 T_0, T_1, …"""
    width = 1.0 / math.sqrt(curv)
    v_hi = _half_width(curv, sigma, width, 1.0)
    v_lo = -_half_width(curv, sigma, width, -1.0)

    h = width
    while True:
        v = np.arange(math.ceil(v_lo / h), math.floor(v_hi / h) + 1) * h
        exponent = _shifted_exponent(v, curv, sigma)
        if tau:
            values = np.exp(exponent + 1j * tau * v)
        else:
            values = np.exp(exponent)
        yield complex(h * values.sum())
        h /= 2


def trapezoid_levels(order: complex, y: float, levels: int) -> list[complex]:
    """단계별 K_s(y) 근사값 (수렴 진단용)"""
    sigma, tau, curv, peak = _saddle(order, y)
    sums = _trapezoid_sums(sigma, tau, curv)
    return [0.5 * cmath.exp(peak) * next(sums) for _ in range(levels + 1)]


def log_bessel_k(order: complex, y: float, precision: Precision = DEFAULT_PRECISION) -> complex:
    if not y > 0:
        raise DomainError(f"y는 양수여야 합니다: {y}", y=y)

    sigma, tau, curv, peak = _saddle(order, y)
    sums = _trapezoid_sums(sigma, tau, curv)
    previous = next(sums)
    error = math.inf
    for level in range(1, precision.quad_levels + 1):
        current = next(sums)
        error = abs(current - previous) / abs(current)
        if level >= 2 and error <= precision.rel_tol:
            return peak + cmath.log(0.5 * current)
        previous = current
    raise AccuracyError(
        f"K-Bessel 구적법이 {precision.quad_levels}단계 안에 수렴하지 않았습니다",
        achieved=error,
        order=complex(order),
        y=y,
    )


def bessel_k(order: complex, y: float, precision: Precision = DEFAULT_PRECISION) -> complex:
    return cmath.exp(log_bessel_k(order, y, precision))
