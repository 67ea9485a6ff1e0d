"""
CLI 유틸리티 함수들
"""

from functools import wraps
from typing import Callable
import argparse
import json
import logging
import math
import sys

from app.errors import EisensteinError


logger = logging.getLogger(__name__)

# 도메인 오류 종료 코드
EXIT_DOMAIN_ERROR = 2
# 잘못된 플래그 (sysexits EX_USAGE)
EXIT_USAGE = 64


def handle_errors(exit_code: int = EXIT_DOMAIN_ERROR, log_error: bool = True):
    """
    도메인 예외 처리 데코레이터

    EisensteinError 를 잡아 {code, message, context} JSON 한 줄을 표준 에러로 쓰고
    exit_code 를 반환한다. 그 밖의 예외는 그대로 전파한다.

    Args:
        exit_code: 도메인 오류 시 반환할 종료 코드
        log_error: 에러 로그 출력 여부
    """
    def decorator(func: Callable[..., int]) -> Callable[..., int]:
        @wraps(func)
        def wrapper(*args, **kwargs) -> int:
            try:
                return func(*args, **kwargs)
            except EisensteinError as e:
                if log_error:
                    logger.error(f"{func.__name__}: {e.message}")
                print(json.dumps(e.to_record(), ensure_ascii=False, sort_keys=True), file=sys.stderr)
                return exit_code
        return wrapper
    return decorator


def parse_pair(text: str) -> tuple[float, float]:
    """
    "3,3" 형태의 쉼표 구분 실수 쌍을 파싱

    argparse type 으로 쓰이며 실패하면 ArgumentTypeError.
    """
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"쉼표로 구분한 두 실수가 필요합니다: {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"실수로 변환할 수 없습니다: {text!r}")


def parse_positive_pair(text: str) -> tuple[float, float]:
    x1, x2 = parse_pair(text)
    if not (x1 > 0 and x2 > 0):
        raise argparse.ArgumentTypeError(f"토러스 좌표는 양수여야 합니다: {text!r}")
    return x1, x2


def parse_complex(text: str) -> complex:
    """"-3" 또는 "-3,0.5" (실수부, 허수부)"""
    parts = [part.strip() for part in text.split(",")]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"복소수 형식이 아닙니다: {text!r}")


def frange(start: float, stop: float, step: float) -> list[float]:
    """start 부터 stop 까지 (양 끝 포함) step 간격, 누적 오차 없이 정수 배로 생성"""
    if step <= 0:
        raise ValueError(f"step은 양수여야 합니다: {step}")
    count = math.floor((stop - start) / step + 1e-9) + 1
    return [round(start + k * step, 12) for k in range(max(count, 0))]

