"""
다항식 데이터 파일 로딩 유틸리티

긴 생성원 목록(최소 연관 소 이데알, J 성분, 몫 성분, Allwright 사상)은
패키지 data/ 디렉토리의 JSON 파일에 두고 이름으로 읽는다.
파일은 한 번만 파싱하고, 이데알은 호출마다 새로 만든다 (그뢰브너 기저 캐시가 객체별이므로).
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Any

from steadycert.config import DATA_DIR
from steadycert.exactalg.parser import parse_polynomial
from steadycert.exactalg.polynomial import Polynomial
from steadycert.groebner.ideals import Ideal


def dataset_path(name: str) -> Path:
    """
    "minimal_primes_I" 또는 "minimal_primes_I.json" → data/ 안의 경로

    Raises:
        FileNotFoundError: 데이터 파일이 없을 경우
    """
    path = DATA_DIR / (name if name.endswith(".json") else f"{name}.json")
    if not path.exists():
        raise FileNotFoundError(f"데이터 파일을 찾을 수 없습니다: {path}")
    return path


@lru_cache(maxsize=None)
def _read(name: str) -> dict[str, Any]:
    return json.loads(dataset_path(name).read_text(encoding="utf-8"))


def load_ideal(dataset: str, key: str | None = None) -> Ideal:
    """
    데이터 파일의 이데알 하나

    Args:
        dataset: 데이터 파일명
        key: components 안의 이름 (예: "I1", "J1"), None이면 "ideal" 항목

    Raises:
        FileNotFoundError: 데이터 파일이 없을 때
        KeyError: 항목이 없을 때
    """
    data = _read(dataset)
    if key is None:
        return Ideal.from_json(data["ideal"])
    components = data["components"]
    if key not in components:
        raise KeyError(f"{dataset}에 성분 {key}가 없습니다. (사용 가능: {', '.join(components)})")
    return Ideal.from_json(components[key])


def load_component_list(dataset: str) -> list[Ideal]:
    """components가 목록인 데이터 파일 (몫 성분)"""
    return [Ideal.from_json(obj) for obj in _read(dataset)["components"]]


def load_rational_map(dataset: str) -> tuple[Polynomial, Polynomial, tuple[str, ...]]:
    """
    분자/분모 텍스트로 저장된 유리 사상

    Returns:
        (분자, 분모, 변수 컨텍스트)
    """
    data = _read(dataset)
    context = tuple(data["vars"])
    return (
        parse_polynomial(data["numerator"], context),
        parse_polynomial(data["denominator"], context),
        context,
    )


def load_fixed_points(dataset: str) -> dict[str, str]:
    """유리 사상과 함께 기록된 고정점 식 (원문 텍스트 그대로)"""
    return dict(_read(dataset)["fixed_points"])
