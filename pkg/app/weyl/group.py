"""
무한 이면체 Weyl 군의 표준형

W = {1, r₁(r₂r₁)ⁿ, r₂(r₁r₂)ⁿ, (r₁r₂)^{n+1}, (r₂r₁)^{n+1} : n ≥ 0}
원소는 (shape, n) 으로만 표현하고 곱은 축약 단어를 통해서만 다룬다.
"""

from dataclasses import dataclass
from enum import IntEnum


class Shape(IntEnum):
    # 같은 길이 안에서의 표준 순서: R1Alt < R2Alt < Alt12 < Alt21
    Id = 0
    R1Alt = 1
    R2Alt = 2
    Alt12 = 3
    Alt21 = 4


@dataclass(frozen=True)
class WeylElt:
    shape: Shape
    n: int = 0

    def __post_init__(self):
        if self.n < 0 or (self.shape == Shape.Id and self.n != 0):
            raise ValueError(f"잘못된 표준형: ({self.shape.name}, {self.n})")

    @property
    def length(self) -> int:
        if self.shape == Shape.Id:
            return 0
        if self.shape in (Shape.R1Alt, Shape.R2Alt):
            return 2 * self.n + 1
        return 2 * self.n + 2

    def sort_key(self) -> tuple[int, int]:
        return self.length, int(self.shape)

    def __str__(self) -> str:
        word = reduced_word(self)
        return "1" if not word else "".join(f"r{k}" for k in word)


IDENTITY = WeylElt(Shape.Id)


def reduced_word(w: WeylElt) -> list[int]:
    """w = r_{k₁} r_{k₂} ⋯ r_{k_ℓ} 의 (k₁, …, k_ℓ)"""
    match w.shape:
        case Shape.Id:
            return []
        case Shape.R1Alt:
            return [1] + [2, 1] * w.n
        case Shape.R2Alt:
            return [2] + [1, 2] * w.n
        case Shape.Alt12:
            return [1, 2] * (w.n + 1)
        case Shape.Alt21:
            return [2, 1] * (w.n + 1)


def from_word(word: list[int]) -> WeylElt:
    """임의의 생성원 단어를 축약해 표준형으로 변환"""
    reduced: list[int] = []
    for k in word:
        if k not in (1, 2):
            raise ValueError(f"생성원 인덱스는 1 또는 2: {k}")
        if reduced and reduced[-1] == k:
            reduced.pop()
        else:
            reduced.append(k)
    length = len(reduced)
    if length == 0:
        return IDENTITY
    first = reduced[0]
    if length % 2 == 1:
        return WeylElt(Shape.R1Alt if first == 1 else Shape.R2Alt, (length - 1) // 2)
    return WeylElt(Shape.Alt12 if first == 1 else Shape.Alt21, length // 2 - 1)


def inverse(w: WeylElt) -> WeylElt:
    match w.shape:
        case Shape.Alt12:
            return WeylElt(Shape.Alt21, w.n)
        case Shape.Alt21:
            return WeylElt(Shape.Alt12, w.n)
        case _:
            # 홀수 길이 원소는 회문 단어라 자기 자신이 역원
            return w


def enumerate_W(max_len: int) -> list[WeylElt]:
    """길이 ≤ max_len 인 모든 원소 (길이, shape 순)"""
    if max_len < 0:
        raise ValueError(f"max_len은 0 이상이어야 합니다: {max_len}")
    elements = [IDENTITY]
    for length in range(1, max_len + 1):
        if length % 2 == 1:
            n = (length - 1) // 2
            elements += [WeylElt(Shape.R1Alt, n), WeylElt(Shape.R2Alt, n)]
        else:
            n = length // 2 - 1
            elements += [WeylElt(Shape.Alt12, n), WeylElt(Shape.Alt21, n)]
    return elements


def starts_with(w: WeylElt, k: int) -> bool:
    word = reduced_word(w)
    return bool(word) and word[0] == k
