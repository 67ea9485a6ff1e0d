"""
도메인 예외 정의

모든 예외는 기계가 읽을 수 있는 code와 context를 가지며,
CLI는 to_record()로 {code, message, context} 객체를 출력한다.
"""

from typing import Any


class EisensteinError(Exception):
    """엔진 공통 예외"""

    code: str = "eisenstein_error"

    def __init__(self, message: str, **context: Any):
        super().__init__(message)
        self.message = message
        self.context = context

    def to_record(self) -> dict[str, Any]:
        return {
            "code": self.code,
            "message": self.message,
            "context": {key: _plain(value) for key, value in self.context.items()},
        }


def _plain(value: Any) -> Any:
    """context 값을 JSON 직렬화 가능한 형태로 변환"""
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


class InvalidPrecision(EisensteinError, ValueError):
    code = "invalid_precision"


class InvalidCartan(EisensteinError, ValueError):
    code = "invalid_cartan"


class NotRealRoot(EisensteinError, ValueError):
    code = "not_real_root"


class InvalidIndex(EisensteinError, ValueError):
    code = "invalid_index"


class DomainError(EisensteinError, ValueError):
    code = "domain_error"


class PoleError(EisensteinError, ZeroDivisionError):
    code = "pole"

    def __init__(self, message: str, pole: complex, **context: Any):
        super().__init__(message, pole=pole, **context)
        self.pole = pole


class AccuracyError(EisensteinError, ArithmeticError):
    code = "accuracy"

    def __init__(self, message: str, achieved: float, **context: Any):
        super().__init__(message, achieved=achieved, **context)
        self.achieved = achieved


class OutsideValidityRegion(EisensteinError, ValueError):
    code = "outside_validity_region"


class GodementViolation(EisensteinError, ValueError):
    code = "godement_violation"


class NotInCone(EisensteinError, ValueError):
    code = "not_in_cone"


class TermOverflow(EisensteinError, OverflowError):
    code = "term_overflow"


class DegenerateCharacter(EisensteinError, ValueError):
    code = "degenerate_character"


class OutsideTheoremRegion(EisensteinError, ValueError):
    code = "outside_theorem_region"


class NotInW1(EisensteinError, ValueError):
    code = "not_in_w1"
