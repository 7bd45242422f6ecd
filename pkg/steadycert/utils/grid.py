"""
파라미터 격자와 로그 균등 표본

격자 문자열: "s:1e-2:1e2:10,b:1e-2:1e2:10,g:1e-2:1e2:10"
(이름:하한:상한:개수, 쉼표로 구분)
값은 유효숫자 3자리 10진 유리수로 만들어 정확한 계산에 그대로 쓴다.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Optional, Sequence

import numpy as np

from steadycert.exactalg.rational import rational_to_str, significant_rational, to_rational
from steadycert.models.base_model import ParameterSet


@dataclass(frozen=True)
class GridAxis:
    """격자 축 하나"""
    name: str
    lo: float
    hi: float
    count: int
    log: bool = False

    def values(self) -> list[Fraction]:
        if self.count == 1:
            return [significant_rational(self.lo)]
        if self.log:
            raw = np.geomspace(self.lo, self.hi, self.count)
        else:
            raw = np.linspace(self.lo, self.hi, self.count)
        return [significant_rational(float(v)) for v in raw]

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "lo": self.lo, "hi": self.hi, "count": self.count, "log": self.log}


@dataclass
class ParameterGrid:
    """축들의 곱 격자 + 고정 파라미터"""
    axes: tuple[GridAxis, ...]
    fixed: dict = field(default_factory=dict)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(axis.count for axis in self.axes)

    def points(self) -> list[tuple[tuple[int, ...], ParameterSet]]:
        """
        (인덱스 튜플, 파라미터) 목록 (첫 축이 가장 느리게 변함)
        """
        values = [axis.values() for axis in self.axes]
        result = []
        for index in itertools.product(*(range(len(v)) for v in values)):
            params = dict(self.fixed)
            for axis, axis_values, k in zip(self.axes, values, index):
                params[axis.name] = axis_values[k]
            result.append((index, ParameterSet.from_mapping(params)))
        return result

    def to_dict(self) -> dict[str, Any]:
        return {
            "axes": [axis.to_dict() for axis in self.axes],
            "fixed": {k: rational_to_str(v) for k, v in self.fixed.items()},
        }


def parse_grid(text: str, log: bool = False, fixed: Optional[Mapping[str, Any]] = None) -> ParameterGrid:
    """
    격자 문자열 파싱

    Args:
        text: "name:lo:hi:count,..."
        log: 로그 간격 여부
        fixed: 격자에 없는 고정 파라미터

    Raises:
        ValueError: 형식 오류, 개수 < 1, 로그 격자에서 양수가 아닌 범위
    """
    axes = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        parts = item.split(":")
        if len(parts) != 4:
            raise ValueError(f"격자 축 형식은 name:lo:hi:count 입니다: {item!r}")
        name, lo, hi, count = parts[0].strip(), float(parts[1]), float(parts[2]), int(parts[3])
        if count < 1:
            raise ValueError(f"격자 점 개수는 1 이상이어야 합니다: {item!r}")
        if lo > hi:
            raise ValueError(f"하한이 상한보다 큽니다: {item!r}")
        if log and lo <= 0:
            raise ValueError(f"로그 격자의 범위는 양수여야 합니다: {item!r}")
        if any(axis.name == name for axis in axes):
            raise ValueError(f"격자 축이 중복되었습니다: {name}")
        axes.append(GridAxis(name, lo, hi, count, log))
    if not axes:
        raise ValueError("격자가 비어 있습니다.")
    fixed_values = {k: to_rational(v) for k, v in (fixed or {}).items()}
    overlap = [a.name for a in axes if a.name in fixed_values]
    if overlap:
        raise ValueError(f"격자 축과 고정 파라미터가 겹칩니다: {overlap}")
    return ParameterGrid(tuple(axes), fixed_values)


def parse_range(text: str) -> tuple[float, float]:
    """"1e-3:1e3" → (0.001, 1000.0)"""
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"범위 형식은 lo:hi 입니다: {text!r}")
    lo, hi = float(parts[0]), float(parts[1])
    if not 0 < lo <= hi:
        raise ValueError(f"범위는 0 < lo <= hi 이어야 합니다: {text!r}")
    return lo, hi


def sample_log_uniform(
    names: Sequence[str],
    count: int,
    lo: float,
    hi: float,
    seed: int,
    fixed: Optional[Mapping[str, Any]] = None,
) -> list[ParameterSet]:
    """
    [lo, hi] 로그 균등 표본 (시드 고정, 유효숫자 3자리 유리수)
    """
    rng = np.random.default_rng(seed)
    raw = np.exp(rng.uniform(np.log(lo), np.log(hi), size=(count, len(names))))
    samples = []
    for row in raw:
        params = {k: to_rational(v) for k, v in (fixed or {}).items()}
        params.update({name: significant_rational(float(v)) for name, v in zip(names, row)})
        samples.append(ParameterSet.from_mapping(params))
    return samples
