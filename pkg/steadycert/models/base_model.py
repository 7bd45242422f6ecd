"""
ODE 모델 추상 베이스 클래스

Strategy 패턴으로 모델마다 우변과 정상상태 광선(ray)을 정의
- Repressilator3D / ForwardFeedback6D / BackwardFeedback6D: 리프레실레이터 모델
- GoodwinModel / ElowitzLeiblerModel: Hill 지수 n 모델
- RelaxationModel: 1차원 선형 이완 (테스트용)

우변은 파라미터 + 상태 컨텍스트의 RationalFunction이다.
정확(유리수) 평가와 부동소수 평가를 모두 제공한다.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Mapping, Optional, Sequence

import numpy as np

from steadycert.errors import CertificationError, ContextError, ModelDomainError
from steadycert.exactalg.linalg import berkowitz
from steadycert.exactalg.polynomial import Polynomial
from steadycert.exactalg.ratfunc import RationalFunction
from steadycert.exactalg.rational import rational_to_str, to_rational
from steadycert.realroots import univariate as uv
from steadycert.realroots.algebraic import AlgebraicPoint
from steadycert.realroots.sturm import isolate_roots, root_bound

logger = logging.getLogger(__name__)

# 광선/곡선 대입에 쓰는 보조 변수 이름
CURVE_VAR = "ray_t"


@dataclass(frozen=True, eq=False)
class ParameterSet:
    """파라미터 이름 → 정확한 유리수 값 (입력 순서 유지)"""
    values: dict = field(default_factory=dict)

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, Any]) -> "ParameterSet":
        """
        Args:
            mapping: {"s": "3/10", "b": 4, "g": 0.6} (문자열/정수/분수/부동소수)

        Raises:
            ValueError: 유리수로 바꿀 수 없는 값
        """
        return cls({str(k): to_rational(v) for k, v in mapping.items()})

    @classmethod
    def parse(cls, text: str) -> "ParameterSet":
        """"s=0.3,b=4,g=0.6" 형식"""
        values = {}
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            if "=" not in item:
                raise ValueError(f"파라미터 형식은 name=value 입니다: {item!r}")
            name, raw = item.split("=", 1)
            name = name.strip()
            if name in values:
                raise ValueError(f"파라미터가 중복되었습니다: {name}")
            values[name] = to_rational(raw.strip())
        if not values:
            raise ValueError("파라미터가 비어 있습니다.")
        return cls(values)

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> "ParameterSet":
        """{"model": ..., "params": {...}} 또는 {...}"""
        params = obj.get("params", obj)
        if not isinstance(params, Mapping):
            raise ValueError("params는 객체여야 합니다.")
        return cls.from_mapping(params)

    def __getitem__(self, name: str) -> Fraction:
        return self.values[name]

    def __contains__(self, name: str) -> bool:
        return name in self.values

    def __eq__(self, other) -> bool:
        return isinstance(other, ParameterSet) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.key())

    def get(self, name: str, default=None):
        return self.values.get(name, default)

    def key(self) -> tuple:
        return tuple(sorted(self.values.items()))

    @property
    def s(self) -> Fraction:
        return self.values["s"]

    @property
    def b(self) -> Fraction:
        return self.values["b"]

    @property
    def g(self) -> Fraction:
        return self.values["g"]

    def hill(self, default: int = 1) -> int:
        """Hill 지수 n (정수, 1 이상)"""
        n = self.values.get("n", default)
        if Fraction(n).denominator != 1 or n < 1:
            raise ModelDomainError(f"Hill 지수 n은 1 이상의 정수여야 합니다: {n}")
        return int(n)

    def with_values(self, **updates) -> "ParameterSet":
        values = dict(self.values)
        values.update({k: to_rational(v) for k, v in updates.items()})
        return ParameterSet(values)

    def floats(self) -> dict[str, float]:
        return {k: float(v) for k, v in self.values.items()}

    def to_dict(self) -> dict[str, str]:
        return {k: rational_to_str(v) for k, v in self.values.items()}

    def __str__(self) -> str:
        return ",".join(f"{k}={rational_to_str(v)}" for k, v in self.values.items())


@dataclass
class SteadyState:
    """정상상태: 대수적 점 + (있으면) 닫힌 형태"""
    model_id: str
    label: str
    point: AlgebraicPoint
    positive: bool
    formula: Optional[str] = None
    closed_form_value: Optional[float] = None

    def coordinates(self) -> np.ndarray:
        return self.point.approx()

    def to_dict(self) -> dict[str, Any]:
        data = {
            "model": self.model_id,
            "label": self.label,
            "positive": self.positive,
            "coordinates": [float(v) for v in self.coordinates()],
            "certificate": self.point.to_dict(),
        }
        if self.formula is not None:
            data["formula"] = self.formula
            data["closed_form_value"] = self.closed_form_value
        return data


class ModelDef(ABC):
    """유리함수 우변을 가진 ODE 모델"""

    model_id: str = ""
    description: str = ""
    states: tuple[str, ...] = ()
    parameters: tuple[str, ...] = ()
    # 0을 허용하는 파라미터 (나머지는 양수)
    nonnegative: tuple[str, ...] = ()
    # 대칭 축소 (버리는 변수, 남기는 변수): 정상상태에서 두 좌표가 같다
    reduction: tuple[tuple[str, str], ...] = ()

    def __init__(self):
        self.context: tuple[str, ...] = tuple(self.parameters) + tuple(self.states)
        self.rhs: tuple[RationalFunction, ...] = tuple(self._build_rhs())
        if len(self.rhs) != len(self.states):
            raise ContextError(f"{self.model_id}: 우변 개수가 상태 개수와 다릅니다.")
        self._specialized: dict[tuple, tuple[RationalFunction, ...]] = {}

    # ----------------------------------------------------------------- 정의

    @abstractmethod
    def _build_rhs(self) -> list[RationalFunction]:
        """파라미터 + 상태 컨텍스트의 우변 목록"""
        pass

    @abstractmethod
    def steady_state_ray(self, params: ParameterSet) -> tuple[list[Fraction], list[Fraction]]:
        """
        정상상태가 놓이는 광선 x_i = scale_i · t 와 t의 정의다항식

        Returns:
            (오름차순 계수 목록, 좌표별 배율)
        """
        pass

    def _rf(self, numerator: str, denominator: Optional[str] = None) -> RationalFunction:
        if denominator is None:
            return RationalFunction.parse(numerator, "1", self.context)
        return RationalFunction.parse(numerator, denominator, self.context)

    @property
    def dimension(self) -> int:
        return len(self.states)

    @property
    def reduced_states(self) -> tuple[str, ...]:
        dropped = {d for d, _ in self.reduction}
        return tuple(x for x in self.states if x not in dropped)

    def describe(self) -> dict[str, Any]:
        return {
            "model": self.model_id,
            "description": self.description,
            "states": list(self.states),
            "parameters": list(self.parameters),
            "rhs": [str(f) for f in self.rhs],
        }

    # ----------------------------------------------------------------- 파라미터

    def validate(self, params: ParameterSet) -> dict[str, Fraction]:
        """
        파라미터 검사 후 컨텍스트 순서의 값 사전

        Raises:
            ModelDomainError: 누락, 알 수 없는 이름, 양수가 아닌 값
        """
        missing = [p for p in self.parameters if p not in params]
        if missing:
            raise ModelDomainError(f"{self.model_id}: 파라미터가 없습니다: {missing}")
        unknown = [k for k in params.values if k not in self.parameters and k != "n"]
        if unknown:
            raise ModelDomainError(f"{self.model_id}: 알 수 없는 파라미터: {unknown}")
        values = {}
        for name in self.parameters:
            value = params[name]
            if value < 0 or (value == 0 and name not in self.nonnegative):
                raise ModelDomainError(f"{self.model_id}: 파라미터 {name}={value}는 양수여야 합니다.")
            values[name] = value
        return values

    def specialize(self, params: ParameterSet) -> tuple[RationalFunction, ...]:
        """파라미터를 대입한 상태 컨텍스트 우변 (파라미터별 캐시)"""
        key = params.key()
        if key not in self._specialized:
            values = self.validate(params)
            self._specialized[key] = tuple(
                f.subs(values).restrict_context(self.states) for f in self.rhs
            )
        return self._specialized[key]

    # ----------------------------------------------------------------- 평가

    def _check_state(self, state: Sequence) -> None:
        if len(state) != self.dimension:
            raise ContextError(f"{self.model_id}: 상태 길이 {len(state)} != {self.dimension}")

    def rhs_eval(self, params: ParameterSet, state: Sequence, exact: bool = True, strict: bool = True):
        """
        우변 값

        Args:
            exact: True면 Fraction 목록, False면 numpy 배열
            strict: True면 분모가 양수가 아닐 때 오류

        Raises:
            ModelDomainError: 분모가 0 (strict면 0 이하)
        """
        self._check_state(state)
        rhs = self.specialize(params)
        if strict:
            self._check_denominators(rhs, state)
        if exact:
            values = [to_rational(v) for v in state]
            return [f.evaluate(values) for f in rhs]
        vec = np.asarray(state, dtype=float)
        return np.array([f.evaluate_float(vec) for f in rhs])

    def _check_denominators(self, rhs: Sequence[RationalFunction], state: Sequence) -> None:
        vec = [to_rational(v) for v in state] if all(
            isinstance(v, (int, Fraction, str)) for v in state
        ) else None
        for f in rhs:
            for atom in f.factors:
                value = atom.evaluate(vec) if vec is not None else atom.evaluate_float(state)
                if value <= 0:
                    raise ModelDomainError(f"{self.model_id}: 분모 {atom}가 양수가 아닙니다 ({float(value):.6g}).")

    def vector_field(self, params: ParameterSet) -> Callable[[float, np.ndarray], np.ndarray]:
        """적분기용 부동소수 우변 f(t, x)"""
        rhs = self.specialize(params)
        parts = []
        for f in rhs:
            atoms = [(a.float_evaluator(), p) for a, p in f.factors.items()]
            parts.append((f.numerator.float_evaluator(), atoms))

        def field_fn(t: float, x: np.ndarray) -> np.ndarray:
            out = np.empty(len(parts))
            for i, (num, atoms) in enumerate(parts):
                den = 1.0
                for atom, power in atoms:
                    den *= atom(x) ** power
                out[i] = num(x) / den
            return out

        return field_fn

    # ----------------------------------------------------------------- 정상상태 다항식

    def stationarity_numerators(self, reduced: bool = False) -> list[Polynomial]:
        """
        분모를 없앤 정상상태 다항식

        Args:
            reduced: True면 대칭 축소된 집합 (남은 상태 변수 컨텍스트)
        """
        if not reduced or not self.reduction:
            return [f.numerator for f in self.rhs]
        mapping = {
            dropped: Polynomial.variable(self.context, kept) for dropped, kept in self.reduction
        }
        kept_context = tuple(self.parameters) + self.reduced_states
        result = []
        for x, f in zip(self.states, self.rhs):
            if x in mapping:
                continue
            result.append(f.subs(mapping).restrict_context(kept_context).numerator)
        return result

    def denominators(self) -> list[Polynomial]:
        """우변에 등장하는 서로 다른 분모 인수"""
        seen: list[Polynomial] = []
        for f in self.rhs:
            for atom in f.factors:
                if atom not in seen:
                    seen.append(atom)
        return seen

    # ----------------------------------------------------------------- 야코비안

    @cached_property
    def symbolic_jacobian(self) -> list[list[RationalFunction]]:
        return [[f.derivative(x) for x in self.states] for f in self.rhs]

    def jacobian(self, params: ParameterSet, state: Sequence, exact: bool = True):
        """
        상태에서의 야코비안 (정확: Fraction 행렬, 부동소수: numpy 배열)

        Raises:
            ModelDomainError: 분모가 0일 때
        """
        self._check_state(state)
        values = self.validate(params)
        if exact:
            full = dict(values)
            full.update({x: to_rational(v) for x, v in zip(self.states, state)})
            return [[entry.evaluate(full) for entry in row] for row in self.symbolic_jacobian]
        vec = np.array([float(values[p]) for p in self.parameters] + [float(v) for v in state])
        return np.array([[entry.evaluate_float(vec) for entry in row] for row in self.symbolic_jacobian])

    def char_poly(self, params: ParameterSet, state: Sequence) -> Polynomial:
        """det(λI − J)의 정확한 모닉 다항식 (변수 lam)"""
        coeffs = berkowitz(self.jacobian(params, state, exact=True))
        return Polynomial.from_dense([Fraction(c) for c in reversed(coeffs)], ("lam",), "lam")

    def char_poly_float(self, params: ParameterSet, state: Sequence) -> np.ndarray:
        """부동소수 특성다항식 계수 (내림차순)"""
        coeffs = berkowitz(self.jacobian(params, state, exact=False).tolist())
        return np.array([float(c) for c in coeffs])

    def jacobian_along(self, params: ParameterSet, point: AlgebraicPoint) -> list[list[RationalFunction]]:
        """
        상태를 점의 좌표 사상 φ_i(t)로 바꾼 야코비안 (변수 CURVE_VAR 하나의 유리함수)
        """
        if point.names != self.states:
            raise ContextError(f"점의 변수 {point.names}가 모델 상태 {self.states}와 다릅니다.")
        ext = self.context + (CURVE_VAR,)
        mapping: dict = dict(self.validate(params))
        for x, coords in zip(self.states, point.coordinates):
            mapping[x] = Polynomial.from_dense(list(coords), ext, CURVE_VAR)
        return [
            [entry.extend_context(ext).subs(mapping).restrict_context((CURVE_VAR,)) for entry in row]
            for row in self.symbolic_jacobian
        ]

    # ----------------------------------------------------------------- 정상상태

    def ray_points(self, params: ParameterSet, positive_only: bool = False) -> list[AlgebraicPoint]:
        defining, scales = self.steady_state_ray(params)
        defining = uv.strip(defining)
        domain = (Fraction(0), root_bound(defining)) if positive_only else None
        return [
            AlgebraicPoint.ray(defining, iv, scales, self.states)
            for iv in isolate_roots(defining, domain)
        ]

    def positive_steady_state(self, params: ParameterSet) -> SteadyState:
        """
        양의 정상상태 (광선 위 1차원 근 분리)

        Raises:
            CertificationError: 양의 근이 정확히 하나가 아닐 때
        """
        self.validate(params)
        points = [p for p in self.ray_points(params, positive_only=True) if p.is_positive()]
        if len(points) != 1:
            raise CertificationError(
                f"{self.model_id}: 양의 정상상태가 {len(points)}개입니다 ({params})"
            )
        logger.debug("%s 양의 정상상태 %s", self.model_id, points[0].approx())
        return SteadyState(self.model_id, "positive", points[0], True)

    def closed_form_steady_states(self, params: ParameterSet) -> list[SteadyState]:
        """기본: 광선 위 양의 정상상태 하나"""
        return [self.positive_steady_state(params)]

    def residual(self, params: ParameterSet, state: Sequence) -> float:
        """부동소수 우변의 최대 절댓값"""
        return float(np.max(np.abs(self.rhs_eval(params, state, exact=False, strict=False))))
