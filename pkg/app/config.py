"""
Eisenstein 급수 계산 엔진 설정 관리 모듈
"""

from dataclasses import dataclass
import os

from dotenv import load_dotenv

from app.errors import InvalidPrecision


@dataclass(frozen=True)
class Precision:
    """수치 정밀도 설정"""

    # 목표 상대 오차
    rel_tol: float = 1e-10

    # 구적법 최대 세분화 단계
    quad_levels: int = 12

    # Euler-Maclaurin 직접합 구간과 보정항 개수
    euler_maclaurin_N: int = 40
    euler_maclaurin_M: int = 20

    def __post_init__(self):
        if not (0.0 < self.rel_tol <= 1e-3):
            raise InvalidPrecision(
                f"rel_tol은 (0, 1e-3] 범위여야 합니다: {self.rel_tol}",
                rel_tol=self.rel_tol,
            )
        for name in ("quad_levels", "euler_maclaurin_N", "euler_maclaurin_M"):
            value = getattr(self, name)
            if value <= 0:
                raise InvalidPrecision(f"{name}은 양수여야 합니다: {value}", **{name: value})

    @classmethod
    def from_env(cls) -> "Precision":
        """환경 변수에서 설정을 로드"""
        load_dotenv()
        return cls(
            rel_tol=float(os.getenv("EISEN_REL_TOL", cls.rel_tol)),
            quad_levels=int(os.getenv("EISEN_QUAD_LEVELS", cls.quad_levels)),
            euler_maclaurin_N=int(os.getenv("EISEN_EM_N", cls.euler_maclaurin_N)),
            euler_maclaurin_M=int(os.getenv("EISEN_EM_M", cls.euler_maclaurin_M)),
        )


@dataclass(frozen=True)
class CliDefaults:
    """CLI 기본값"""

    max_length: int = 20
    output_format: str = "json"
    workers: int = 1
    log_level: str = "INFO"

    @classmethod
    def from_env(cls) -> "CliDefaults":
        load_dotenv()
        return cls(
            workers=int(os.getenv("EISEN_WORKERS", cls.workers)),
            log_level=os.getenv("EISEN_LOG_LEVEL", cls.log_level).upper(),
        )


# 환경 변수와 무관한 라이브러리 기본 정밀도
DEFAULT_PRECISION = Precision()
