"""
보고서 직렬화 (JSON / CSV)

- 복소수는 JSON 에서 {re, im} 객체, CSV 에서 _re / _im 두 열
- 유한하지 않은 값은 float() 로 되읽히는 문자열 "inf", "-inf", "nan"
- 같은 입력은 바이트 단위로 같은 출력을 만든다 (키 정렬, 고정 포맷)
"""

from enum import Enum
from fractions import Fraction
from typing import Any
import csv
import io
import json
import math

from pydantic import BaseModel


def _json_float(x: float) -> float | str:
    return x if math.isfinite(x) else repr(x)


def to_plain(value: Any) -> Any:
    """BaseModel, 복소수, Fraction 등을 JSON 직렬화 가능한 값으로 변환"""
    if isinstance(value, BaseModel):
        return to_plain(value.model_dump())
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else float(value)
    if isinstance(value, float):
        return _json_float(value)
    if isinstance(value, complex):
        return {"re": _json_float(value.real), "im": _json_float(value.imag)}
    if isinstance(value, dict):
        return {str(key): to_plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(item) for item in value]
    return str(value)


def render_json(report: Any) -> str:
    return json.dumps(to_plain(report), ensure_ascii=False, indent=2, sort_keys=True, allow_nan=False)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g") if math.isfinite(value) else repr(value)
    return str(value)


def flatten_row(row: dict[str, Any]) -> dict[str, str]:
    """복소수는 두 열로 펼치고 나머지는 문자열 셀로 변환"""
    flat: dict[str, str] = {}
    for key, value in row.items():
        plain = to_plain(value)
        if isinstance(plain, dict) and set(plain) == {"re", "im"}:
            flat[f"{key}_re"] = _cell(plain["re"])
            flat[f"{key}_im"] = _cell(plain["im"])
        elif isinstance(plain, list):
            flat[key] = ";".join(_cell(item) for item in plain)
        else:
            flat[key] = _cell(plain)
    return flat


def render_csv(rows: list[dict[str, Any]]) -> str:
    flat_rows = [flatten_row(row) for row in rows]
    fieldnames: list[str] = []
    for row in flat_rows:
        for key in row:
            if key not in fieldnames:
                fieldnames.append(key)

    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    writer.writerows(flat_rows)
    return buffer.getvalue()


def render(report: Any, rows: list[dict[str, Any]], output_format: str) -> str:
    if output_format == "csv":
        return render_csv(rows)
    return render_json(report)
