"""
퇴화 지표 ψ_{i,n} 에 대한 Fourier 계수

E_{ν,ψ_{i,n}}(a) = Σ_{w⁻¹α_i < 0} a^{w(ν+ρ)-ρ} W_n(a^{-α_i}, 1 + w(ν+ρ)(h_{α_i}))
                   × Π_{α ∈ Φ₊∩w⁻¹Φ₋, α ≠ -w⁻¹α_i} ξ(-(ν+ρ)(h_α)) / ξ(1-(ν+ρ)(h_α))

두 단순근 모두에서 비자명한 일반 지표의 계수는 0 이다.
"""

import cmath
import logging
import math

from app.config import DEFAULT_PRECISION, Precision
from app.errors import DegenerateCharacter, OutsideValidityRegion, TermOverflow
from app.rootsys.cartan import SIMPLE_ROOTS, CartanData, TorusPoint, Weight, pair, rho, torus_eval, torus_log
from app.series.c_function import log_c_product
from app.series.constant_term import check_cone, check_godement
from app.series.truncation import TruncatedSum, truncated_sum
from app.specfun.whittaker import log_whittaker_global
from app.weyl.action import act, act_weight, inversion_set, sends_simple_root_negative
from app.weyl.group import WeylElt, enumerate_W, inverse


logger = logging.getLogger(__name__)


def _check_index(i: int):
    if i not in SIMPLE_ROOTS:
        raise ValueError(f"단순근 인덱스는 1 또는 2: {i}")


def whittaker_argument(cd: CartanData, nu: Weight, w: WeylElt, i: int) -> complex:
    """s = 1 + w(ν+ρ)(h_{α_i})"""
    return 1 + complex(pair(cd, act_weight(cd, w, nu + rho(cd)), SIMPLE_ROOTS[i]))


def fourier_log_summand(
    cd: CartanData,
    i: int,
    n: int,
    nu: Weight,
    a: TorusPoint,
    w: WeylElt,
    precision: Precision = DEFAULT_PRECISION,
) -> complex:
    _check_index(i)
    alpha_i = SIMPLE_ROOTS[i]
    consumed = -act(cd, inverse(w), alpha_i)
    if not consumed.is_positive():
        raise ValueError(f"w⁻¹α_{i} < 0 인 원소만 기여합니다: w={w}")

    r = rho(cd)
    try:
        exponent = act_weight(cd, w, nu + r) - r
        s = whittaker_argument(cd, nu, w, i)
        if not s.real > 1:
            raise OutsideValidityRegion(
                f"Whittaker 인자의 Re s > 1 이 성립하지 않습니다: w={w}",
                w=str(w),
                s=s,
            )
        y = torus_eval(cd, a, -alpha_i.as_weight())
        roots = [alpha for alpha in inversion_set(cd, w) if alpha != consumed]
        total = (
            torus_log(cd, a, exponent)
            + log_whittaker_global(n, y, s, precision)
            + log_c_product(cd, nu, roots, precision)
        )
    except OverflowError as e:
        raise TermOverflow(f"Fourier 항의 계수가 float 범위를 넘었습니다: w={w}", w=str(w), length=w.length) from e
    # Whittaker 인자와 토러스 지수가 둘 다 무한대로 발산해 크기를 정할 수 없다
    if math.isnan(total.real):
        raise TermOverflow(f"Fourier 항의 크기를 정할 수 없습니다: w={w}", w=str(w), length=w.length)
    return total


def fourier_summand(
    cd: CartanData,
    i: int,
    n: int,
    nu: Weight,
    a: TorusPoint,
    w: WeylElt,
    precision: Precision = DEFAULT_PRECISION,
) -> complex:
    return cmath.exp(fourier_log_summand(cd, i, n, nu, a, w, precision))


def contributing_elements(cd: CartanData, i: int, max_length: int) -> list[WeylElt]:
    """w⁻¹α_i < 0 인 길이 ≤ max_length 원소"""
    return [w for w in enumerate_W(max_length) if sends_simple_root_negative(cd, w, i)]


def fourier_coeff(
    cd: CartanData,
    i: int,
    n: int,
    nu: Weight,
    a: TorusPoint,
    precision: Precision = DEFAULT_PRECISION,
    max_length: int = 20,
    workers: int = 1,
) -> TruncatedSum:
    _check_index(i)
    if n == 0:
        raise DegenerateCharacter(
            "n = 0 인 지표는 자명합니다. constant_term 을 사용하세요",
            i=i,
            n=n,
        )
    check_godement(cd, nu)
    check_cone(cd, a)

    result = truncated_sum(
        contributing_elements(cd, i, max_length),
        lambda w: fourier_log_summand(cd, i, n, nu, a, w, precision),
        max_length,
        precision,
        workers,
    )
    logger.info(
        f"Fourier 계수 ψ_({i},{n}) m={cd.m}, 길이 ≤ {max_length}: "
        f"항 {result.terms_used}개, 수렴={result.converged}"
    )
    return result


def generic_fourier_coeff(cd: CartanData, nu: Weight, a: TorusPoint, max_length: int = 20) -> TruncatedSum:
    """일반 지표 (두 단순근 모두에서 비자명) 의 계수, 항등적으로 0"""
    check_godement(cd, nu)
    check_cone(cd, a)
    return TruncatedSum(
        value=0j,
        terms_used=0,
        max_length=max_length,
        last_term_mag=0.0,
        tail_ratio=0.0,
        converged=True,
        band_log_max=[],
        bands=[],
    )
