"""
JSON 보고서 저장/로딩

모든 보고서에 스키마 버전, 도구 이름/버전, 시드, 예산, 입력(argv) 기록을 붙인다.
같은 입력이면 바이트 단위로 같은 출력이 나오도록 키를 정렬하고
부동소수는 고정 형식(유효숫자 12자리)으로 반올림한다.
"""

import json
import math
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

import numpy as np

from steadycert import __version__, config

TOOL_NAME = "steadycert"

# 보고서 부동소수 유효숫자
FLOAT_DIGITS = 12


def normalize(value: Any) -> Any:
    """
    JSON으로 쓸 수 있는 값으로 변환

    - Fraction → "p/q" 문자열, 부동소수 → 유효숫자 FLOAT_DIGITS 자리
    - numpy 스칼라/배열, 튜플, 복소수 [re, im] 처리
    - nan/inf → 문자열
    """
    if isinstance(value, dict):
        return {str(k): normalize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [normalize(v) for v in value]
    if isinstance(value, np.ndarray):
        return normalize(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (complex, np.complexfloating)):
        return [normalize(float(value.real)), normalize(float(value.imag))]
    if isinstance(value, (float, np.floating)):
        x = float(value)
        if not math.isfinite(x):
            return str(x)
        return float(f"{x:.{FLOAT_DIGITS}g}")
    if hasattr(value, "to_dict"):
        return normalize(value.to_dict())
    return value


def provenance(
    seed: Optional[int] = None,
    budgets: Optional[dict] = None,
    argv: Optional[Sequence[str]] = None,
) -> dict[str, Any]:
    """보고서 머리말 (출력 경로 인자는 argv 기록에서 뺀다)"""
    echo = []
    skip = False
    for arg in argv or []:
        if skip:
            skip = False
            continue
        if arg == "--out":
            skip = True
            continue
        if arg.startswith("--out="):
            continue
        echo.append(arg)
    return {
        "schema": config.REPORT_SCHEMA,
        "tool": {"name": TOOL_NAME, "version": __version__},
        "seed": seed,
        "budgets": budgets or {"max_pairs": config.MAX_PAIRS, "max_seconds": config.BUDGET_SECS},
        "input": echo,
    }


def build_report(kind: str, body: Any, seed: Optional[int] = None, budgets: Optional[dict] = None,
                 argv: Optional[Sequence[str]] = None) -> dict[str, Any]:
    """
    보고서 딕셔너리

    Args:
        kind: 보고서 종류 (하위 명령 이름)
        body: 결과 (to_dict가 있는 객체 또는 딕셔너리)
    """
    report = provenance(seed, budgets, argv)
    report["kind"] = kind
    report["result"] = normalize(body)
    return report


def dumps(report: dict) -> str:
    return json.dumps(normalize(report), ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def save_report(report: dict, path) -> Path:
    """
    보고서 저장 (UTF-8)

    Returns:
        저장된 경로
    """
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(report), encoding="utf-8")
    return path


def load_report(path) -> dict:
    """
    보고서 로딩

    Raises:
        FileNotFoundError: 파일이 없을 때
        ValueError: 스키마 버전이 다를 때
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"보고서 파일을 찾을 수 없습니다: {path}")
    data = json.loads(path.read_text(encoding="utf-8"))
    if data.get("schema") != config.REPORT_SCHEMA:
        raise ValueError(f"지원하지 않는 보고서 스키마입니다: {data.get('schema')}")
    return data
