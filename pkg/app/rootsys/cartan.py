"""
rank 2 hyperbolic Kac-Moody 근계 모듈

Cartan 데이터, 근 벡터 산술, 쌍대근 pairing, 토러스 값 계산,
Godement 판정 조건과 A' 원뿔 판정을 제공한다.
모든 좌표는 단순근 기저 (α₁, α₂) 기준이다.
"""

from dataclasses import dataclass
from fractions import Fraction
import cmath
import math

from app.errors import InvalidCartan, NotRealRoot


Scalar = int | float | complex | Fraction


@dataclass(frozen=True)
class CartanData:
    """대칭 일반화 Cartan 행렬 [[2, -m], [-m, 2]]"""

    m: int
    gamma: float
    gram: tuple[tuple[int, int], tuple[int, int]]

    @property
    def disc(self) -> float:
        """2γ - m = √(m² - 4)"""
        return 2 * self.gamma - self.m


@dataclass(frozen=True)
class RootVec:
    """정수 좌표 c₁α₁ + c₂α₂"""

    c1: int
    c2: int

    def __add__(self, other: "RootVec") -> "RootVec":
        return RootVec(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: "RootVec") -> "RootVec":
        return RootVec(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> "RootVec":
        return RootVec(-self.c1, -self.c2)

    def __mul__(self, k: int) -> "RootVec":
        return RootVec(k * self.c1, k * self.c2)

    __rmul__ = __mul__

    def is_positive(self) -> bool:
        return self.c1 >= 0 and self.c2 >= 0 and (self.c1, self.c2) != (0, 0)

    def is_negative(self) -> bool:
        return (-self).is_positive()

    def as_weight(self) -> "Weight":
        return Weight(self.c1, self.c2)


ALPHA1 = RootVec(1, 0)
ALPHA2 = RootVec(0, 1)
SIMPLE_ROOTS = {1: ALPHA1, 2: ALPHA2}


@dataclass(frozen=True)
class Weight:
    """스칼라(실수 또는 복소수) 좌표 s₁α₁ + s₂α₂"""

    s1: Scalar
    s2: Scalar

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.s1 + other.s1, self.s2 + other.s2)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.s1 - other.s1, self.s2 - other.s2)

    def __neg__(self) -> "Weight":
        return Weight(-self.s1, -self.s2)

    def __mul__(self, k: Scalar) -> "Weight":
        return Weight(k * self.s1, k * self.s2)

    __rmul__ = __mul__

    def swapped(self) -> "Weight":
        return Weight(self.s2, self.s1)


@dataclass(frozen=True)
class TorusPoint:
    """h_{α₁}(x₁)h_{α₂}(x₂) ∈ A⁺"""

    x1: float
    x2: float

    def __post_init__(self):
        if not (self.x1 > 0 and self.x2 > 0):
            raise ValueError(f"토러스 좌표는 양수여야 합니다: ({self.x1}, {self.x2})")

    def swapped(self) -> "TorusPoint":
        return TorusPoint(self.x2, self.x1)


def new_cartan(m: int) -> CartanData:
    """m ≥ 3 에 대한 Cartan 데이터 생성"""
    if m < 3:
        raise InvalidCartan(f"m은 3 이상이어야 합니다 (m=2는 affine): {m}", m=m)
    gamma = (m + math.sqrt(m * m - 4)) / 2
    return CartanData(m=m, gamma=gamma, gram=((2, -m), (-m, 2)))


def norm(cd: CartanData, alpha: RootVec) -> int:
    """(α, α) = 2c₁² + 2c₂² - 2m·c₁c₂"""
    return 2 * alpha.c1 ** 2 + 2 * alpha.c2 ** 2 - 2 * cd.m * alpha.c1 * alpha.c2


def is_real_root(cd: CartanData, alpha: RootVec) -> bool:
    return norm(cd, alpha) == 2


def simple_pairings(cd: CartanData, lam: Weight) -> tuple[Scalar, Scalar]:
    """(λ(h_{α₁}), λ(h_{α₂})) = (2s₁ - m s₂, 2s₂ - m s₁)"""
    return 2 * lam.s1 - cd.m * lam.s2, 2 * lam.s2 - cd.m * lam.s1


def pair(cd: CartanData, lam: Weight, alpha: RootVec) -> Scalar:
    """
    실근 α에 대한 λ(h_α)

    대칭 Cartan 행렬에서 실근의 쌍대근은 h_α = c₁h_{α₁} + c₂h_{α₂} 이므로
    λ(h_α) = c₁λ(h_{α₁}) + c₂λ(h_{α₂}).
    """
    if not is_real_root(cd, alpha):
        raise NotRealRoot(f"실근이 아닙니다: ({alpha.c1}, {alpha.c2})", c1=alpha.c1, c2=alpha.c2)
    p1, p2 = simple_pairings(cd, lam)
    return alpha.c1 * p1 + alpha.c2 * p2


def simple_reflection(cd: CartanData, i: int, alpha: RootVec) -> RootVec:
    """r_i(α) = α - α(h_{α_i})α_i"""
    if i == 1:
        return RootVec(-alpha.c1 + cd.m * alpha.c2, alpha.c2)
    if i == 2:
        return RootVec(alpha.c1, -alpha.c2 + cd.m * alpha.c1)
    raise ValueError(f"단순 반사 인덱스는 1 또는 2: {i}")


def reflect_weight(cd: CartanData, i: int, lam: Weight) -> Weight:
    if i == 1:
        return Weight(-lam.s1 + cd.m * lam.s2, lam.s2)
    if i == 2:
        return Weight(lam.s1, -lam.s2 + cd.m * lam.s1)
    raise ValueError(f"단순 반사 인덱스는 1 또는 2: {i}")


def torus_log(cd: CartanData, a: TorusPoint, mu: Weight) -> complex:
    """log a^μ = μ(h_{α₁}) ln x₁ + μ(h_{α₂}) ln x₂"""
    p1, p2 = simple_pairings(cd, mu)
    return complex(p1) * math.log(a.x1) + complex(p2) * math.log(a.x2)


def torus_eval(cd: CartanData, a: TorusPoint, mu: Weight) -> float | complex:
    """a^μ (복소 지수는 주값 exp(μ(h)·ln x))"""
    exponent = torus_log(cd, a, mu)
    if exponent.imag == 0:
        try:
            return math.exp(exponent.real)
        except OverflowError:
            return math.inf
    return cmath.exp(exponent)


def rho(cd: CartanData) -> Weight:
    """ρ = (α₁ + α₂)/(2 - m)"""
    return Weight(Fraction(1, 2 - cd.m), Fraction(1, 2 - cd.m))


def varpi2(cd: CartanData) -> Weight:
    """α₂에 대응하는 기본 웨이트 ϖ₂ = (mα₁ + 2α₂)/(4 - m²)"""
    denom = 4 - cd.m * cd.m
    return Weight(Fraction(cd.m, denom), Fraction(2, denom))


def in_A_prime(cd: CartanData, a: TorusPoint) -> bool:
    """a^{α_i} < 1 (i = 1, 2)"""
    return all(torus_log(cd, a, root.as_weight()).real < 0 for root in SIMPLE_ROOTS.values())


def godement(cd: CartanData, nu: Weight) -> bool:
    """Re ν(h_{α_i}) < -2 (경계는 만족하지 않음)"""
    return all(complex(p).real < -2 for p in simple_pairings(cd, nu))


def godement_growth_constants(cd: CartanData, nu: Weight) -> tuple[float, float]:
    """
    상수항 지수의 성장 상수 (C_ν, D_ν)

    r₁(r₂r₁)ⁿ(ν+ρ)-ρ ≈ C_ν(γ^{2n+2}α₁ + γ^{2n+1}α₂),
    (r₁r₂)^{n+1}(ν+ρ)-ρ ≈ D_ν(γ^{2n+3}α₁ + γ^{2n+2}α₂).
    Godement 조건에서 두 상수 모두 양수.
    """
    g = cd.gamma
    s1, s2 = complex(nu.s1).real, complex(nu.s2).real
    shift = g / (g - 1)
    c_nu = (g * s2 - s1 - shift) / (g * g - 1)
    d_nu = (g * s1 - s2 - shift) / (g * g - 1)
    return c_nu, d_nu


def real_roots_in_box(cd: CartanData, bound: int) -> set[RootVec]:
    """
    단순근의 Weyl 궤도 중 |c_j| ≤ bound 인 실근 전체

    반사를 반복 적용하는 궤도 탐색이라 is_real_root 판정과 독립적이다.
    """
    found = set()
    frontier = [ALPHA1, ALPHA2]
    while frontier:
        root = frontier.pop()
        if root in found or abs(root.c1) > bound or abs(root.c2) > bound:
            continue
        found.add(root)
        frontier.append(-root)
        for i in (1, 2):
            frontier.append(simple_reflection(cd, i, root))
    return found
