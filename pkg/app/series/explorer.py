"""
수렴 영역 탐색기

격자의 각 점에서 c-함수 유효 영역 검사 없이 절단 합을 길이 띠별로 계산하고,
연속한 띠의 최대 항 크기를 비교해 꼬리 거동을 Decaying / Stalling / Growing 으로 분류한다.
경험적 분류일 뿐 수렴을 증명하지 않는다.
"""

from enum import Enum
import logging
import math

from pydantic import BaseModel
from tqdm import tqdm

from app.config import DEFAULT_PRECISION, Precision
from app.errors import PoleError, TermOverflow
from app.rootsys.cartan import CartanData, TorusPoint, Weight, rho
from app.series.constant_term import check_cone, constant_term_log_summand
from app.series.cuspidal import cuspidal_log_summand, w1_elements
from app.series.truncation import Band, iter_bands
from app.weyl.group import enumerate_W


logger = logging.getLogger(__name__)

# 분류에 사용하는 마지막 띠 개수
_TAIL_BANDS = 4


class Verdict(str, Enum):
    DECAYING = "Decaying"
    STALLING = "Stalling"
    GROWING = "Growing"


class ConvergenceReport(BaseModel):
    cuspidal: bool
    # 대각선 탐색은 [s₁, s₂], 첨점 탐색은 [s]
    nu_or_s: list[complex]
    a: tuple[float, float]
    partial_sums: list[tuple[int, complex]]
    band_log_max: list[float]
    verdict: Verdict
    note: str | None = None


def diagonal_weight(cd: CartanData, t: float) -> Weight:
    """ν = tρ, 즉 ν(h_{α₁}) = ν(h_{α₂}) = t"""
    return rho(cd) * t


def classify_tail(bands: list[Band], rel_tol: float) -> Verdict:
    """마지막 띠들의 최대 항 로그가 단조 감소면 Decaying, 단조 증가면 Growing"""
    logs = [band.log_max for band in bands if band.count > 0]
    tail = logs[-_TAIL_BANDS:]
    if len(tail) < 3:
        return Verdict.STALLING
    if tail[-1] == -math.inf:
        return Verdict.DECAYING

    finite = [x for x in tail if x != -math.inf]
    steps = [b - a for a, b in zip(finite, finite[1:])]
    if steps and all(step < 0 for step in steps):
        # 항 크기가 rel_tol 아래로 내려가지 않으면 아직 판단할 수 없다
        if finite[-1] < math.log(rel_tol) + max(0.0, finite[0]):
            return Verdict.DECAYING
        return Verdict.STALLING
    if steps and all(step > 0 for step in steps):
        return Verdict.GROWING
    return Verdict.STALLING


def _scan_point(bands_iter, rel_tol: float) -> tuple[list[tuple[int, complex]], list[float], Verdict, str | None]:
    partial_sums: list[tuple[int, complex]] = []
    band_log_max: list[float] = []
    bands: list[Band] = []
    total = 0j
    try:
        for band in bands_iter:
            total += band.value
            partial_sums.append((band.length, total))
            band_log_max.append(band.log_max)
            bands.append(band)
    except TermOverflow as e:
        return partial_sums, band_log_max, Verdict.GROWING, e.message
    except PoleError as e:
        return partial_sums, band_log_max, Verdict.STALLING, e.message
    return partial_sums, band_log_max, classify_tail(bands, rel_tol), None


def scan_convergence(
    cd: CartanData,
    grid: list[float] | list[complex],
    a: TorusPoint,
    precision: Precision = DEFAULT_PRECISION,
    max_length: int = 20,
    cuspidal: bool = False,
    workers: int = 1,
) -> list[ConvergenceReport]:
    """
    cuspidal=False 면 격자 값 t 마다 ν = tρ 의 상수항을,
    cuspidal=True 면 s 마다 W₁ 위의 첨점 상수항을 탐색한다.
    """
    check_cone(cd, a)
    elements = w1_elements(cd, max_length) if cuspidal else enumerate_W(max_length)

    reports = []
    for point in tqdm(grid, desc="scan", disable=None):
        if cuspidal:
            s = complex(point)
            coords = [s]
            log_term = lambda w, s=s: cuspidal_log_summand(cd, s, a, w, precision, strict=False)
        else:
            nu = diagonal_weight(cd, float(point))
            coords = [complex(nu.s1), complex(nu.s2)]
            log_term = lambda w, nu=nu: constant_term_log_summand(cd, nu, a, w, precision, strict=False)

        partial_sums, band_log_max, verdict, note = _scan_point(
            iter_bands(elements, log_term, max_length, workers), precision.rel_tol
        )
        if note:
            logger.warning(f"탐색점 {point}: {note}")
        reports.append(
            ConvergenceReport(
                cuspidal=cuspidal,
                nu_or_s=coords,
                a=(a.x1, a.x2),
                partial_sums=partial_sums,
                band_log_max=band_log_max,
                verdict=verdict,
                note=note,
            )
        )
    logger.info(f"탐색 완료: {len(reports)}개 점")
    return reports
