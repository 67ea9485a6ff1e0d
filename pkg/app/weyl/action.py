"""
Weyl 군 작용 모듈

단순근 위의 작용은 B_n 닫힌 꼴로, 일반 근과 웨이트는 정수 행렬로 선형 확장한다.
act_by_reflections 는 단순 반사를 축약 단어를 따라 합성하는 독립 오라클이다.
"""

from app.rootsys.cartan import (
    ALPHA1,
    ALPHA2,
    SIMPLE_ROOTS,
    CartanData,
    RootVec,
    Weight,
    reflect_weight,
    rho,
    simple_reflection,
)
from app.weyl.group import Shape, WeylElt, inverse, reduced_word
from app.weyl.sequences import seq_A, seq_B


# 축척 후 계수에 남기는 최대 비트 수
_SCALED_BITS = 900


def _simple_images(cd: CartanData, w: WeylElt) -> tuple[RootVec, RootVec]:
    """(wα₁, wα₂)"""
    m, n = cd.m, w.n
    B = lambda k: seq_B(m, k)
    match w.shape:
        case Shape.Id:
            return ALPHA1, ALPHA2
        case Shape.R1Alt:
            return RootVec(-B(2 * n + 1), -B(2 * n)), RootVec(B(2 * n + 2), B(2 * n + 1))
        case Shape.Alt12:
            return RootVec(B(2 * n + 3), B(2 * n + 2)), RootVec(-B(2 * n + 2), -B(2 * n + 1))
        # α₁ ↔ α₂ 교환으로 얻는 r₂ 쪽 원소
        case Shape.R2Alt:
            return RootVec(B(2 * n + 1), B(2 * n + 2)), RootVec(-B(2 * n), -B(2 * n + 1))
        case Shape.Alt21:
            return RootVec(-B(2 * n + 1), -B(2 * n + 2)), RootVec(B(2 * n + 2), B(2 * n + 3))


def act(cd: CartanData, w: WeylElt, alpha: RootVec) -> RootVec:
    col1, col2 = _simple_images(cd, w)
    return RootVec(
        alpha.c1 * col1.c1 + alpha.c2 * col2.c1,
        alpha.c1 * col1.c2 + alpha.c2 * col2.c2,
    )


def act_weight(cd: CartanData, w: WeylElt, lam: Weight) -> Weight:
    col1, col2 = _simple_images(cd, w)
    return Weight(
        lam.s1 * col1.c1 + lam.s2 * col2.c1,
        lam.s1 * col1.c2 + lam.s2 * col2.c2,
    )


def act_weight_scaled(cd: CartanData, w: WeylElt, lam: Weight) -> tuple[Weight, int]:
    """
    (2⁻ᵏ·wλ, k)

    긴 원소에서 B_n 이 float 범위를 넘을 때 wλ 의 방향만 구하는 용도.
    """
    col1, col2 = _simple_images(cd, w)
    entries = (col1.c1, col1.c2, col2.c1, col2.c2)
    k = max(0, max(abs(c).bit_length() for c in entries) - _SCALED_BITS)
    # 정수 나눗셈 결과는 올바르게 반올림된 float
    c11, c12, c21, c22 = (c / (1 << k) for c in entries)
    return Weight(lam.s1 * c11 + lam.s2 * c21, lam.s1 * c12 + lam.s2 * c22), k


def w_rho_shift(cd: CartanData, w: WeylElt) -> Weight:
    """wρ - ρ 의 닫힌 꼴 (정수 계수)"""
    m, n = cd.m, w.n
    A = lambda k: seq_A(m, k)
    match w.shape:
        case Shape.Id:
            return Weight(0, 0)
        case Shape.R1Alt:
            return Weight(-A(2 * n + 1), -A(2 * n))
        case Shape.R2Alt:
            return Weight(-A(2 * n), -A(2 * n + 1))
        case Shape.Alt12:
            return Weight(-A(2 * n + 2), -A(2 * n + 1))
        case Shape.Alt21:
            return Weight(-A(2 * n + 1), -A(2 * n + 2))


def act_by_reflections(cd: CartanData, word: list[int], alpha: RootVec) -> RootVec:
    """r_{k₁}⋯r_{k_ℓ} α 를 오른쪽부터 단순 반사로 계산"""
    for k in reversed(word):
        alpha = simple_reflection(cd, k, alpha)
    return alpha


def weight_by_reflections(cd: CartanData, word: list[int], lam: Weight) -> Weight:
    for k in reversed(word):
        lam = reflect_weight(cd, k, lam)
    return lam


def inversion_set(cd: CartanData, w: WeylElt) -> list[RootVec]:
    """
    Φ₊ ∩ w⁻¹Φ₋ 를 축약 단어 순서로 반환

    w⁻¹ = r_{k₁}⋯r_{k_ℓ} 일 때 β_j = r_{k₁}⋯r_{k_{j-1}} α_{k_j}.
    Fourier 계수 계산에서 β_ℓ 이 마지막으로 적분되므로 순서를 유지한다.
    """
    word = reduced_word(inverse(w))
    return [act_by_reflections(cd, word[:j], SIMPLE_ROOTS[k]) for j, k in enumerate(word)]


def positive_roots_sent_negative(cd: CartanData, w: WeylElt) -> list[RootVec]:
    """Φ_w = Φ₊ ∩ wΦ₋ (w⁻¹ 의 inversion set)"""
    return inversion_set(cd, inverse(w))


def alt12_inversion_closed_form(cd: CartanData, n: int) -> list[RootVec]:
    """w = (r₁r₂)ⁿ 에 대해 Φ₊ ∩ w⁻¹Φ₋ = {B_iα₁ + B_{i+1}α₂ : i = 0..2n-1}"""
    return [RootVec(seq_B(cd.m, i), seq_B(cd.m, i + 1)) for i in range(2 * n)]


def in_W1(cd: CartanData, w: WeylElt) -> bool:
    """wα₁ > 0 인 최소 길이 잉여류 대표원"""
    return act(cd, w, ALPHA1).is_positive()


def sends_simple_root_negative(cd: CartanData, w: WeylElt, i: int) -> bool:
    """w⁻¹α_i < 0"""
    return act(cd, inverse(w), SIMPLE_ROOTS[i]).is_negative()


def rho_minus_inverse_rho(cd: CartanData, w: WeylElt) -> Weight:
    """ρ - w⁻¹ρ, inversion set 의 합과 같아야 한다"""
    return -w_rho_shift(cd, inverse(w))


def rho_shift_by_reflections(cd: CartanData, w: WeylElt) -> Weight:
    r = rho(cd)
    return weight_by_reflections(cd, reduced_word(w), r) - r
