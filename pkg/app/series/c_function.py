"""
Gindikin-Karpelevich c-함수

c(ν, w) = Π_{α ∈ Φ₊ ∩ w⁻¹Φ₋} ξ(-(ν+ρ)(h_α)) / ξ(1-(ν+ρ)(h_α))
"""

import cmath
import math

from app.config import DEFAULT_PRECISION, Precision
from app.errors import OutsideValidityRegion, PoleError, TermOverflow
from app.rootsys.cartan import CartanData, RootVec, Weight, pair, rho
from app.specfun.gamma_zeta import log_xi
from app.weyl.action import inversion_set
from app.weyl.group import WeylElt


# 특이점 -1, 0, 1 로 간주하는 상대 거리
_SNAP_TOL = 1e-9

# Re s 가 이보다 크면 ξ(s)/ξ(s+1) 을 점근 전개로 계산한다
_ASYMPTOTIC_RE = 1e12


def _snap(x: complex) -> complex:
    """부동소수 오차로 특이점에서 벗어난 x 를 정수로 되돌린다"""
    if not cmath.isfinite(x):
        return x
    for k in (-1, 0, 1):
        if abs(x - k) <= _SNAP_TOL * max(1.0, abs(x)):
            return complex(k)
    return x


def _log_xi_step(s: complex) -> complex:
    """
    Re s ≫ 1 에서 log ξ(s)/ξ(s+1)

    log Γ(z) - log Γ(z+½) = -½ log z + 1/(8z) + O(z⁻³), ζ(s)/ζ(s+1) = 1.
    """
    return 0.5 * math.log(math.pi) - 0.5 * cmath.log(s / 2) + 1 / (4 * s)


def log_xi_ratio(x: complex, precision: Precision = DEFAULT_PRECISION) -> complex:
    """
    log ξ(-x)/ξ(1-x)

    x = 1 이면 분모의 극으로 인자가 0 (log = -inf), x = 0 이면 두 극이 상쇄되어 -1.
    x = -1 은 분자의 극이라 PoleError.
    """
    x = _snap(complex(x))
    if x == -1:
        raise PoleError("ξ(-x) 의 극: x = -1", pole=complex(1), x=x)
    if x == 0:
        return complex(0, math.pi)
    if x == 1:
        return complex(-math.inf, 0)
    if -x.real > _ASYMPTOTIC_RE:
        return _log_xi_step(-x)
    # ξ(-x)/ξ(1-x) = ξ(1+x)/ξ(x)
    if x.real > _ASYMPTOTIC_RE:
        return -_log_xi_step(x)
    numerator = log_xi(-x, precision)
    try:
        denominator = log_xi(1 - x, precision)
    except PoleError:
        return complex(-math.inf, 0)
    return numerator - denominator


def _pairing(cd: CartanData, shifted: Weight, alpha: RootVec) -> complex:
    """(ν+ρ)(h_α), float 로 표현할 수 없으면 TermOverflow"""
    try:
        x = complex(pair(cd, shifted, alpha))
    except OverflowError:
        x = complex(math.nan, 0)
    if not cmath.isfinite(x):
        raise TermOverflow(
            f"(ν+ρ)(h_α) 가 float 범위를 넘었습니다: ({alpha.c1}, {alpha.c2})",
            root=[alpha.c1, alpha.c2],
        )
    return x


def log_c_product(
    cd: CartanData,
    nu: Weight,
    roots: list[RootVec],
    precision: Precision = DEFAULT_PRECISION,
    strict: bool = True,
) -> complex:
    """
    주어진 근들에 대한 ξ 비율 곱의 로그

    strict 이면 -Re(ν+ρ)(h_α) > 1 이 아닌 근에서 OutsideValidityRegion 을 던진다.
    """
    shifted = nu + rho(cd)
    total = 0j
    for alpha in roots:
        x = _pairing(cd, shifted, alpha)
        if strict and not -x.real > 1:
            raise OutsideValidityRegion(
                f"-Re(ν+ρ)(h_α) > 1 이 성립하지 않는 근: ({alpha.c1}, {alpha.c2})",
                root=[alpha.c1, alpha.c2],
                pairing=x,
            )
        total += log_xi_ratio(x, precision)
    return total


def log_c_function(
    cd: CartanData,
    nu: Weight,
    w: WeylElt,
    precision: Precision = DEFAULT_PRECISION,
    strict: bool = True,
) -> complex:
    return log_c_product(cd, nu, inversion_set(cd, w), precision, strict)


def c_function(cd: CartanData, nu: Weight, w: WeylElt, precision: Precision = DEFAULT_PRECISION) -> complex:
    return cmath.exp(log_c_function(cd, nu, w, precision))


def validity_margin(cd: CartanData, nu: Weight, roots: list[RootVec]) -> float:
    """min_α (-Re(ν+ρ)(h_α) - 1), 즉 c-함수 유효 영역의 ε"""
    shifted = nu + rho(cd)
    return min((-complex(pair(cd, shifted, alpha)).real - 1 for alpha in roots), default=math.inf)


def c_bound_constant(
    cd: CartanData,
    nu: Weight,
    roots: list[RootVec],
    precision: Precision = DEFAULT_PRECISION,
) -> float:
    """관측된 인자별 |ξ(-x)/ξ(1-x)| 의 최댓값 C_ε, |c(ν, w)| ≤ C_ε^{ℓ(w)}"""
    shifted = nu + rho(cd)
    ratios = [
        math.exp(log_xi_ratio(complex(pair(cd, shifted, alpha)), precision).real) for alpha in roots
    ]
    return max(ratios, default=1.0)
