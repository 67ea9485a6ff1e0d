"""
Eisenstein 급수의 상수항

E♯_ν(a) = Σ_{w ∈ W} a^{w(ν+ρ)-ρ} c(ν, w)
"""

import cmath
import logging
import math

from app.config import DEFAULT_PRECISION, Precision
from app.errors import GodementViolation, NotInCone, TermOverflow
from app.rootsys.cartan import CartanData, TorusPoint, Weight, godement, in_A_prime, rho, simple_pairings, torus_log
from app.series.c_function import log_c_function
from app.series.truncation import TruncatedSum, truncated_sum
from app.weyl.action import act_weight, act_weight_scaled
from app.weyl.group import WeylElt, enumerate_W


logger = logging.getLogger(__name__)


def check_godement(cd: CartanData, nu: Weight):
    if not godement(cd, nu):
        p1, p2 = simple_pairings(cd, nu)
        raise GodementViolation(
            "Godement 조건 Re ν(h_{α_i}) < -2 를 만족하지 않습니다",
            nu=[complex(nu.s1), complex(nu.s2)],
            pairings=[complex(p1), complex(p2)],
        )


def check_cone(cd: CartanData, a: TorusPoint):
    if not in_A_prime(cd, a):
        raise NotInCone(
            f"a 가 A' = {{a^(α_i) < 1}} 에 속하지 않습니다: ({a.x1}, {a.x2})",
            a=[a.x1, a.x2],
        )


def constant_term_log_summand(
    cd: CartanData,
    nu: Weight,
    a: TorusPoint,
    w: WeylElt,
    precision: Precision = DEFAULT_PRECISION,
    strict: bool = True,
) -> complex:
    """log(a^{w(ν+ρ)-ρ} c(ν, w))"""
    r = rho(cd)
    shifted = nu + r
    try:
        torus = torus_log(cd, a, act_weight(cd, w, shifted) - r)
        if math.isfinite(torus.real):
            return torus + log_c_function(cd, nu, w, precision, strict)
    except OverflowError:
        pass
    return beyond_float_log(cd, shifted, a, w)


def beyond_float_log(cd: CartanData, shifted: Weight, a: TorusPoint, w: WeylElt) -> complex:
    """
    계수가 float 범위를 넘는 항의 로그

    c-함수는 근 하나당 O(log|x|) 만 기여하므로 크기는 a^{w(ν+ρ)} 의 지수 부호가 정한다.
    음으로 발산하면 항은 0 (log = -inf), 아니면 TermOverflow.
    """
    direction, k = act_weight_scaled(cd, w, shifted)
    if torus_log(cd, a, direction).real < 0:
        logger.debug(f"w={w}: 지수가 2^{k} 배 축척으로도 음수라 항을 0 으로 둡니다")
        return complex(-math.inf, 0)
    raise TermOverflow(
        f"항 a^(w(ν+ρ)-ρ)c 의 지수가 float 범위를 넘었습니다: w={w}",
        w=str(w),
        length=w.length,
        scale_bits=k,
    )


def constant_term_summand(
    cd: CartanData,
    nu: Weight,
    a: TorusPoint,
    w: WeylElt,
    precision: Precision = DEFAULT_PRECISION,
) -> complex:
    return cmath.exp(constant_term_log_summand(cd, nu, a, w, precision))


def constant_term(
    cd: CartanData,
    nu: Weight,
    a: TorusPoint,
    precision: Precision = DEFAULT_PRECISION,
    max_length: int = 20,
    workers: int = 1,
) -> TruncatedSum:
    check_godement(cd, nu)
    check_cone(cd, a)

    result = truncated_sum(
        enumerate_W(max_length),
        lambda w: constant_term_log_summand(cd, nu, a, w, precision),
        max_length,
        precision,
        workers,
    )
    logger.info(
        f"상수항 m={cd.m}, 길이 ≤ {max_length}: 항 {result.terms_used}개, "
        f"수렴={result.converged}"
    )
    return result
