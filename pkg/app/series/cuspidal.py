"""
첨점 Eisenstein 급수 E_{s,f} 의 상수항과 수렴 상수

E♯_s(a) = Σ_{w ∈ W₁} a^{w(sϖ₂+ρ)-ρ} c(sϖ₂, w),  W₁ = {w : wα₁ > 0}

Re s < -2 에서 절대수렴이 보장되고, C_n 이 발산하는 s < -1-γ⁻¹ 까지 수렴이 예상된다.
이 밖에 토러스 부등식 a^{w⁻¹α₁} ≥ a^{D·w⁻¹ϖ₂}, 근 부등식 α₁(h_α) ≥ D·ϖ₂(h_α) 검사와
지배급수 이동 (d/D ∈ ℕ) 산술을 제공한다.
"""

import cmath
import logging
import math

from pydantic import BaseModel

from app.config import DEFAULT_PRECISION, Precision
from app.errors import NotInW1, OutsideTheoremRegion
from app.rootsys.cartan import ALPHA1, CartanData, TorusPoint, Weight, pair, torus_log, varpi2
from app.series.constant_term import check_cone, constant_term_log_summand
from app.series.truncation import TruncatedSum, truncated_sum
from app.weyl.action import act, act_weight, in_W1, positive_roots_sent_negative
from app.weyl.group import IDENTITY, WeylElt, enumerate_W, inverse
from app.weyl.sequences import seq_B


logger = logging.getLogger(__name__)

# 부동소수 비교 여유
_TOLERANCE = 1e-9


def cuspidal_weight(cd: CartanData, s: complex) -> Weight:
    """ν = sϖ₂"""
    return varpi2(cd) * s


def w1_elements(cd: CartanData, max_length: int) -> list[WeylElt]:
    return [w for w in enumerate_W(max_length) if in_W1(cd, w)]


def cuspidal_log_summand(
    cd: CartanData,
    s: complex,
    a: TorusPoint,
    w: WeylElt,
    precision: Precision = DEFAULT_PRECISION,
    strict: bool = True,
) -> complex:
    return constant_term_log_summand(cd, cuspidal_weight(cd, s), a, w, precision, strict)


def cuspidal_summand(
    cd: CartanData,
    s: complex,
    a: TorusPoint,
    w: WeylElt,
    precision: Precision = DEFAULT_PRECISION,
) -> complex:
    return cmath.exp(cuspidal_log_summand(cd, s, a, w, precision))


def cuspidal_constant_term(
    cd: CartanData,
    s: complex,
    a: TorusPoint,
    precision: Precision = DEFAULT_PRECISION,
    max_length: int = 20,
    workers: int = 1,
    force: bool = False,
) -> TruncatedSum:
    """
    W₁ 위의 절단 합

    Re s ≥ -2 이면 OutsideTheoremRegion. force=True 면 경고만 남기고
    c-함수 유효 영역 검사 없이 계산을 진행한다.
    """
    s = complex(s)
    check_cone(cd, a)
    strict = True
    if not s.real < -2:
        if not force:
            raise OutsideTheoremRegion(f"Re s < -2 가 아닙니다: s={s}", s=s)
        logger.warning(f"Re s < -2 밖에서 강제로 계산합니다: s={s}")
        strict = False

    result = truncated_sum(
        w1_elements(cd, max_length),
        lambda w: cuspidal_log_summand(cd, s, a, w, precision, strict),
        max_length,
        precision,
        workers,
    )
    logger.info(
        f"첨점 상수항 m={cd.m}, s={s}, 길이 ≤ {max_length}: "
        f"항 {result.terms_used}개, 수렴={result.converged}"
    )
    return result


def cuspidal_Cn(cd: CartanData, s: float, n: int) -> float:
    """C_n = γ^{2n} / ((m²-4)(γ+1)(γ-1)²) · [-s(mγ-2)(γ-1) - (m²-4)γ]"""
    m, g = cd.m, cd.gamma
    disc2 = m * m - 4
    bracket = -s * (m * g - 2) * (g - 1) - disc2 * g
    return g ** (2 * n) / (disc2 * (g + 1) * (g - 1) ** 2) * bracket


def convergence_threshold(cd: CartanData) -> float:
    """C_n → +∞ 가 되는 s 의 상한 -1 - 1/γ"""
    return -1 - 1 / cd.gamma


def iwasawa_D(cd: CartanData) -> float:
    """D = 2γ - m = √(m² - 4)"""
    return cd.disc


def torus_constant_limit(cd: CartanData) -> float:
    """토러스 부등식의 D 가 속해야 하는 구간 (0, (m²-4)/(2γ-m)) 의 상한"""
    return (cd.m * cd.m - 4) / cd.disc


def sequence_inequality_holds(cd: CartanData, n: int, D: float) -> bool:
    """B_n ≥ D(2B_{n+1} - mB_n)/(m² - 4)"""
    m = cd.m
    b_n, b_next = seq_B(m, n), seq_B(m, n + 1)
    return b_n >= D * (2 * b_next - m * b_n) / (m * m - 4) - _TOLERANCE * max(1, b_n)


def root_inequality_holds(cd: CartanData, w: WeylElt, D: float) -> bool:
    """Φ_w 의 모든 α 에 대해 α₁(h_α) ≥ D·ϖ₂(h_α)"""
    w2 = varpi2(cd)
    for alpha in positive_roots_sent_negative(cd, w):
        lhs = pair(cd, ALPHA1.as_weight(), alpha)
        rhs = D * float(pair(cd, w2, alpha))
        if lhs < rhs - _TOLERANCE * max(1.0, abs(rhs)):
            return False
    return True


def torus_inequality_holds(cd: CartanData, w: WeylElt, a: TorusPoint, D: float) -> bool:
    """a^{w⁻¹α₁} ≥ a^{D·w⁻¹ϖ₂} 를 로그로 비교"""
    w_inv = inverse(w)
    lhs = torus_log(cd, a, act(cd, w_inv, ALPHA1).as_weight()).real
    rhs = D * torus_log(cd, a, act_weight(cd, w_inv, varpi2(cd))).real
    return lhs >= rhs - _TOLERANCE * max(1.0, abs(rhs))


def max_torus_constant(cd: CartanData, w: WeylElt, a: TorusPoint, grid: int = 64) -> float | None:
    """(0, (m²-4)/(2γ-m)) 의 균등 격자에서 토러스 부등식이 성립하는 가장 큰 D"""
    upper = torus_constant_limit(cd)
    for k in range(grid - 1, 0, -1):
        D = upper * k / grid
        if torus_inequality_holds(cd, w, a, D):
            return D
    return None


def _check_w1(cd: CartanData, w: WeylElt):
    if not in_W1(cd, w):
        raise NotInW1(f"wα₁ > 0 인 잉여류 대표원이 아닙니다: w={w}", w=str(w))


def check_iwasawa_inequalities(cd: CartanData, w: WeylElt, a: TorusPoint, D: float | None = None) -> bool:
    """
    토러스 부등식과 근 부등식 동시 검사

    D 를 주지 않으면 근 부등식은 D = 2γ-m 으로, 토러스 부등식은 허용 구간 탐색으로 판정한다.
    """
    _check_w1(cd, w)
    check_cone(cd, a)
    if w == IDENTITY:
        return True
    roots_ok = root_inequality_holds(cd, w, iwasawa_D(cd) if D is None else D)
    if D is None:
        torus_ok = max_torus_constant(cd, w, a) is not None
    else:
        torus_ok = torus_inequality_holds(cd, w, a, D)
    return torus_ok and roots_ok


class IwasawaCheck(BaseModel):
    w: str
    length: int
    torus_ok: bool
    roots_ok: bool
    d_roots: float
    d_torus: float | None


def iwasawa_report(cd: CartanData, w: WeylElt, a: TorusPoint) -> IwasawaCheck:
    _check_w1(cd, w)
    check_cone(cd, a)
    D = iwasawa_D(cd)
    d_torus = None if w == IDENTITY else max_torus_constant(cd, w, a)
    return IwasawaCheck(
        w=str(w),
        length=w.length,
        torus_ok=w == IDENTITY or d_torus is not None,
        roots_ok=root_inequality_holds(cd, w, D),
        d_roots=D,
        d_torus=d_torus,
    )


class MajorantShift(BaseModel):
    s: complex
    s0: float
    D: float
    n: int
    d: float
    shifted_re: float


def majorant_shift(cd: CartanData, s: complex, s0: float) -> MajorantShift:
    """
    d/D = n ∈ ℕ, d > Re s - s₀ 인 가장 작은 d 를 골라 Re s - d < s₀ < -2 를 확인

    cusp form 의 급감소를 a^{-dϖ₂} 로 흡수해 절대수렴 영역으로 옮기는 단계.
    """
    s = complex(s)
    if not s0 < -2:
        raise OutsideTheoremRegion(f"s₀ < -2 이어야 합니다: {s0}", s0=s0)
    D = iwasawa_D(cd)
    gap = s.real - s0
    n = math.floor(gap / D) + 1 if gap >= 0 else 0
    d = n * D
    shifted_re = s.real - d
    if not shifted_re < s0:
        raise OutsideTheoremRegion(
            f"이동된 실수부 {shifted_re} 가 s₀ = {s0} 보다 작지 않습니다",
            s=s,
            s0=s0,
            d=d,
        )
    return MajorantShift(s=s, s0=s0, D=D, n=n, d=d, shifted_re=shifted_re)
