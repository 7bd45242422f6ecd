"""
Hopf 분기 후보 공식과 격자 반증

공식 (모든 조건의 논리곱):
    정상상태 분자 = 0, 분모 ≠ 0, an > 0, Δ_{n−1} = 0, Δ_{n−2} > 0, ..., Δ1 > 0,
    상태와 파라미터 양수
한정기호 소거 대신 격자/표본의 모든 양의 정상상태에서 공식을 정확히 평가해
만족하는 점(witness)을 찾는다.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from steadycert.exactalg.linalg import berkowitz
from steadycert.exactalg.polynomial import Polynomial
from steadycert.exactalg.ratfunc import RationalFunction
from steadycert.models.base_model import CURVE_VAR, ModelDef, ParameterSet
from steadycert.models.registry import get_model
from steadycert.realroots.algebraic import AlgebraicPoint
from steadycert.stability.classify import curve_float, curve_sign, exact_hurwitz_data
from steadycert.stability.hurwitz import hurwitz_minors
from steadycert.utils.grid import ParameterGrid
from steadycert.utils.parallel import parallel_map

logger = logging.getLogger(__name__)

# 기호 Hurwitz 행렬식을 만드는 최대 차원 (그 이상은 점마다 광선 위에서 계산)
SYMBOLIC_MAX_DIM = 4


@dataclass
class HopfFormula:
    """Hopf 후보 반대수 공식"""
    model_id: str
    context: tuple[str, ...]
    states: tuple[str, ...]
    parameters: tuple[str, ...]
    equations: list[Polynomial]
    nonzero: list[Polynomial]
    an: Optional[RationalFunction] = None
    delta_zero: Optional[RationalFunction] = None
    delta_positive: list[RationalFunction] = field(default_factory=list)
    symbolic: bool = True

    @property
    def dimension(self) -> int:
        return len(self.states)

    @property
    def hopf_possible(self) -> bool:
        """차원 1에서는 Δ_{n−1} 조건이 없으므로 Hopf 분기가 불가능"""
        return self.dimension >= 2

    def state_degree(self, value: RationalFunction | Polynomial) -> int:
        """상태 변수에 대한 (분자) 전체 차수"""
        poly = value.numerator if isinstance(value, RationalFunction) else value
        idx = [self.context.index(x) for x in self.states]
        return max((sum(mon[i] for i in idx) for _, mon in poly.terms), default=-1)

    def conditions(self) -> list[tuple[str, str]]:
        """(관계, 식) 목록"""
        result = [("= 0", str(p)) for p in self.equations]
        result += [("!= 0", str(p)) for p in self.nonzero]
        if self.an is not None:
            result.append(("> 0", str(self.an)))
        if self.delta_zero is not None:
            result.append(("= 0", str(self.delta_zero)))
        result += [("> 0", str(d)) for d in self.delta_positive]
        result += [("> 0", v) for v in self.states + self.parameters]
        return result

    def signs_at(self, params: ParameterSet, point: AlgebraicPoint, model: ModelDef) -> dict[str, Any]:
        """
        기호 an, Δ 들의 점 위 정확한 부호

        Raises:
            ValueError: 기호 공식이 없는 경우
        """
        if not self.symbolic:
            raise ValueError(f"{self.model_id}: 기호 Hurwitz 행렬식이 없습니다.")
        ext = self.context + (CURVE_VAR,)
        mapping: dict = dict(model.validate(params))
        for x, coords in zip(self.states, point.coordinates):
            mapping[x] = Polynomial.from_dense(list(coords), ext, CURVE_VAR)

        def along(value: RationalFunction) -> RationalFunction:
            return value.extend_context(ext).subs(mapping).restrict_context((CURVE_VAR,))

        deltas = list(self.delta_positive) + ([self.delta_zero] if self.delta_zero is not None else [])
        return {
            "an_sign": curve_sign(along(self.an), point),
            "delta_signs": [curve_sign(along(d), point) for d in deltas],
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "model": self.model_id,
            "context": list(self.context),
            "symbolic": self.symbolic,
            "hopf_possible": self.hopf_possible,
            "conditions": [{"relation": rel, "expr": expr} for rel, expr in self.conditions()],
        }


def hopf_formula_build(model: ModelDef) -> HopfFormula:
    """
    모델의 Hopf 후보 공식 (결정적)

    차원 SYMBOLIC_MAX_DIM 이하면 an, Δ 들을 파라미터 + 상태의 유리함수로 만든다.
    """
    formula = HopfFormula(
        model_id=model.model_id,
        context=model.context,
        states=model.states,
        parameters=model.parameters,
        equations=model.stationarity_numerators(),
        nonzero=model.denominators(),
        symbolic=model.dimension <= SYMBOLIC_MAX_DIM,
    )
    if not formula.symbolic:
        logger.info("%s: 차원 %d, 기호 Hurwitz 행렬식 생략", model.model_id, model.dimension)
        return formula

    # 1. 기호 특성다항식 [1, a1, ..., an]
    coeffs = berkowitz(model.symbolic_jacobian)
    n = model.dimension
    formula.an = _as_ratfunc(coeffs[-1], model.context)

    # 2. Δ1..Δ_{n−1}
    if n >= 2:
        deltas = [_as_ratfunc(d, model.context) for d in hurwitz_minors(coeffs, count=n - 1)]
        formula.delta_zero = deltas[-1]
        formula.delta_positive = deltas[:-1]
    return formula


def _as_ratfunc(value, context: Sequence[str]) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction(value)
    return RationalFunction(Polynomial.constant(context, value))


# --------------------------------------------------------------------- 반증


@dataclass
class HopfScanReport:
    """격자/표본 반증 결과"""
    model_id: str
    sampling: dict
    formula: dict
    records: list[dict]
    witnesses: list[dict]
    candidates: list[dict]

    @property
    def points_evaluated(self) -> int:
        return sum(1 for r in self.records if r["success"])

    @property
    def failures(self) -> list[dict]:
        return [r for r in self.records if not r["success"]]

    @property
    def witness_found(self) -> bool:
        return bool(self.witnesses)

    def min_delta(self) -> Optional[float]:
        values = [s["delta_last"] for r in self.records if r["success"] for s in r["states"]
                  if s["delta_last"] is not None]
        return min(values) if values else None

    def to_dict(self) -> dict[str, Any]:
        return {
            "model": self.model_id,
            "sampling": self.sampling,
            "formula": self.formula,
            "points": len(self.records),
            "points_evaluated": self.points_evaluated,
            "failures": [{"index": r["index"], "params": r["params"], "error": r["error_message"]}
                         for r in self.failures],
            "min_delta_last": self.min_delta(),
            "witnesses": self.witnesses,
            "candidates": self.candidates,
            "conclusion": "witness found" if self.witness_found else "no witness found",
        }


def scan_point(item: tuple, model_id: str, hill: int = 1) -> dict[str, Any]:
    """
    한 파라미터 점의 양의 정상상태마다 공식 평가 (프로세스 풀 작업 함수)

    Args:
        item: (인덱스 튜플, {이름: 유리수 문자열})
    """
    index, raw = item
    params = ParameterSet.from_mapping(raw)
    record: dict[str, Any] = {
        "index": list(index),
        "params": params.to_dict(),
        "success": True,
        "error_message": None,
        "states": [],
    }
    try:
        model = get_model(model_id, hill)
        points = [p for p in model.ray_points(params, positive_only=True) if p.is_positive()]
        for point in points:
            data = exact_hurwitz_data(model, params, point)
            t = point.root_approx()
            last = data.deltas[-1] if data.deltas else None
            lower = data.delta_signs[:-1]
            witness = bool(
                data.deltas
                and data.an_sign > 0
                and data.delta_signs[-1] == 0
                and all(s > 0 for s in lower)
            )
            record["states"].append({
                "coordinates": [float(v) for v in point.approx()],
                "an_sign": data.an_sign,
                "delta_signs": data.delta_signs,
                "delta_last": curve_float(last, t) if last is not None else None,
                "witness": witness,
            })
    except Exception as e:
        record["success"] = False
        record["error_message"] = f"{type(e).__name__}: {e}"
        record["states"] = []
    return record


def find_candidates(records: Sequence[dict], grid_shaped: bool) -> list[dict]:
    """
    이웃 격자점 사이에서 Δ_{n−1} 부호가 바뀌는 곳 (연속성으로 그 사이에 해가 있음)
    """
    if not grid_shaped:
        return []
    by_index = {
        tuple(r["index"]): r for r in records
        if r["success"] and len(r["states"]) == 1 and r["states"][0]["delta_signs"]
    }
    candidates = []
    for index, record in by_index.items():
        s1 = record["states"][0]["delta_signs"][-1]
        for axis in range(len(index)):
            neighbour = tuple(i + (1 if k == axis else 0) for k, i in enumerate(index))
            other = by_index.get(neighbour)
            if other is None:
                continue
            s2 = other["states"][0]["delta_signs"][-1]
            if s1 * s2 < 0:
                candidates.append({"between": [record["params"], other["params"]], "axis": axis})
    return candidates


def hopf_falsify(
    model: ModelDef,
    grid: Optional[ParameterGrid] = None,
    samples: Optional[Sequence[ParameterSet]] = None,
    seed: Optional[int] = None,
    jobs: Optional[int] = None,
) -> HopfScanReport:
    """
    격자 또는 표본에서 Hopf 공식 반증

    Args:
        model: 모델 정의
        grid: 파라미터 격자 (samples와 둘 중 하나)
        samples: 파라미터 표본 목록
        seed: 표본 시드 (보고서 기록용)
        jobs: 워커 수

    Returns:
        HopfScanReport (witness가 없으면 conclusion = "no witness found")
    """
    if (grid is None) == (samples is None):
        raise ValueError("grid와 samples 중 정확히 하나를 지정해야 합니다.")
    if grid is not None:
        points = grid.points()
        sampling = {"grid": grid.to_dict(), "seed": seed}
    else:
        points = [((k,), p) for k, p in enumerate(samples)]
        sampling = {"samples": len(points), "seed": seed}

    items = [(index, p.to_dict()) for index, p in points]
    records = parallel_map(
        scan_point, items, jobs, model_id=model.model_id, hill=getattr(model, "n", 1)
    )

    witnesses = [
        {"index": r["index"], "params": r["params"], "coordinates": s["coordinates"]}
        for r in records for s in r["states"] if s["witness"]
    ]
    report = HopfScanReport(
        model_id=model.model_id,
        sampling=sampling,
        formula=hopf_formula_build(model).to_dict(),
        records=records,
        witnesses=witnesses,
        candidates=find_candidates(records, grid is not None),
    )
    logger.info(
        "hopf-scan %s: %d점 평가, witness %d개, 후보 %d개",
        model.model_id, report.points_evaluated, len(witnesses), len(report.candidates),
    )
    return report
