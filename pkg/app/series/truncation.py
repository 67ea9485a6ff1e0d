"""
Weyl 길이 절단 합

항은 길이 띠(band) 단위로 표준 순서대로 더한다.
각 항은 로그 값으로 계산해 넘침을 미리 판정하고, 띠마다 최대 항 크기의 로그를 남긴다.
띠 기여가 0.0 으로 underflow 된 뒤에도 감쇠율은 로그로 추정할 수 있다.
"""

from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import cmath
import logging
import math

from pydantic import BaseModel

from app.config import DEFAULT_PRECISION, Precision
from app.errors import TermOverflow
from app.weyl.group import WeylElt


logger = logging.getLogger(__name__)

# exp 가 float 범위를 넘기 직전의 로그 크기
LOG_OVERFLOW = 709.0


class TruncatedSum(BaseModel):
    value: complex
    terms_used: int
    max_length: int
    last_term_mag: float
    tail_ratio: float
    converged: bool
    # 띠별 최대 항 크기의 자연로그 (항이 없는 띠는 -inf)
    band_log_max: list[float]
    # 띠별 기여 합
    bands: list[complex]


@dataclass(frozen=True)
class Band:
    length: int
    value: complex
    log_max: float
    count: int


LogTerm = Callable[[WeylElt], complex]


def _reduce_band(length: int, elements: list[WeylElt], logs: Iterable[complex]) -> Band:
    value = 0j
    log_max = -math.inf
    count = 0
    for w, log_term in zip(elements, logs):
        if log_term.real > LOG_OVERFLOW:
            raise TermOverflow(
                f"항 a^(w(ν+ρ)-ρ)c 가 표현 범위를 넘었습니다: w={w}",
                w=str(w),
                length=w.length,
                log_magnitude=log_term.real,
            )
        if math.isnan(log_term.real):
            raise TermOverflow(f"항의 크기를 정할 수 없습니다 (nan): w={w}", w=str(w), length=w.length)
        value += cmath.exp(log_term)
        log_max = max(log_max, log_term.real)
        count += 1
    return Band(length=length, value=value, log_max=log_max, count=count)


def iter_bands(
    elements: Iterable[WeylElt],
    log_term: LogTerm,
    max_length: int,
    workers: int = 1,
) -> Iterator[Band]:
    """
    길이 0..max_length 의 띠를 차례로 생성

    elements 는 표준 순서(길이, shape)로 정렬되어 있어야 한다.
    workers > 1 이면 항 값만 병렬로 계산하고 합은 표준 순서로 한다.
    """
    by_length: dict[int, list[WeylElt]] = {length: [] for length in range(max_length + 1)}
    for w in elements:
        if w.length <= max_length:
            by_length[w.length].append(w)

    if workers <= 1:
        for length in range(max_length + 1):
            band_elements = by_length[length]
            yield _reduce_band(length, band_elements, map(log_term, band_elements))
        return

    with ThreadPoolExecutor(max_workers=workers) as executor:
        for length in range(max_length + 1):
            band_elements = by_length[length]
            # executor.map 은 입력 순서대로 결과를 돌려준다
            yield _reduce_band(length, band_elements, executor.map(log_term, band_elements))


def band_ratio(previous: Band | None, last: Band) -> float:
    """exp(log_max_L - log_max_{L-1}), 항이 사라진 경우 0"""
    if last.log_max == -math.inf:
        return 0.0
    if previous is None or previous.log_max == -math.inf:
        return math.inf
    return math.exp(min(last.log_max - previous.log_max, LOG_OVERFLOW))


def summarize(bands: list[Band], max_length: int, precision: Precision = DEFAULT_PRECISION) -> TruncatedSum:
    """띠 목록을 순서대로 더해 수렴 판정과 함께 TruncatedSum 으로 정리"""
    value = 0j
    for band in bands:
        value += band.value

    last = bands[-1]
    previous = bands[-2] if len(bands) >= 2 else None
    tail_ratio = band_ratio(previous, last)
    abs_tol = precision.rel_tol * abs(value)
    converged = (
        previous is not None
        and abs(last.value) < abs_tol
        and abs(previous.value) < abs_tol
        and tail_ratio < 1
    )
    if not converged:
        logger.warning(
            f"길이 {max_length} 절단에서 수렴 조건을 만족하지 못했습니다 "
            f"(마지막 띠 {abs(last.value):.3e}, 비율 {tail_ratio:.3e})"
        )

    return TruncatedSum(
        value=value,
        terms_used=sum(band.count for band in bands),
        max_length=max_length,
        last_term_mag=abs(last.value),
        tail_ratio=tail_ratio,
        converged=converged,
        band_log_max=[band.log_max for band in bands],
        bands=[band.value for band in bands],
    )


def truncated_sum(
    elements: Iterable[WeylElt],
    log_term: LogTerm,
    max_length: int,
    precision: Precision = DEFAULT_PRECISION,
    workers: int = 1,
) -> TruncatedSum:
    if max_length < 0:
        raise ValueError(f"max_length는 0 이상이어야 합니다: {max_length}")
    bands = list(iter_bands(elements, log_term, max_length, workers))
    for band in bands:
        logger.debug(f"길이 {band.length}: 항 {band.count}개, log 최대 {band.log_max:.4g}")
    return summarize(bands, max_length, precision)
