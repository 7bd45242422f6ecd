"""
양의 정상상태 인증 파이프라인

- rep3d: 정상상태 다항식 전체를 풀어 양의 해가 B 하나뿐임을 인증
- fwd6d: 대칭 축소된 3변수 계를 풀어 양의 해가 x1 = x3 = x5 = f 하나뿐임을 인증
- bwd6d: J1 성분(h1, h2, h3)에서 양의 해가 없고 J2 성분에서 F만 양수임을 인증,
         축소된 계의 직접 풀이로 교차 검증
파라미터 명제는 점마다(유리수 표본) 정확 산술로 인증한다.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

from steadycert.certify.solver import ZeroDimSolution, solve_zero_dimensional
from steadycert.errors import CertificationError
from steadycert.exactalg.polynomial import Polynomial
from steadycert.groebner.buchberger import Budget
from steadycert.models.base_model import ModelDef, ParameterSet
from steadycert.models.registry import get_model
from steadycert.realroots import univariate as uv
from steadycert.realroots.algebraic import AlgebraicPoint
from steadycert.realroots.sturm import isolate_roots
from steadycert.utils.data_loader import load_ideal
from steadycert.utils.grid import sample_log_uniform
from steadycert.utils.parallel import parallel_map

logger = logging.getLogger(__name__)

CERTIFIABLE_MODELS = ("rep3d", "fwd6d", "bwd6d")

# 결론 플래그 이름
FLAG_UNIQUE = "unique_positive"
FLAG_SYMMETRIC = "symmetric"
FLAG_NO_J1 = "no_positive_on_j1"


@dataclass
class CertificateReport:
    """
    인증 결과

    records: 표본별 결과 (success, error_message, positive_states, checks ...)
    checks: 표본과 무관한 검사 (포함관계, 몫 등)
    flags: 결론 플래그 (None이면 해당 없음)
    """
    model_id: str
    sampling: dict
    records: list[dict] = field(default_factory=list)
    checks: list[dict] = field(default_factory=list)
    flags: dict[str, Optional[bool]] = field(default_factory=dict)

    @property
    def failures(self) -> list[dict]:
        return [r for r in self.records if not r["success"]]

    @property
    def passed(self) -> bool:
        """모든 표본 성공, 모든 검사 통과, 모든 해당 플래그 참"""
        return (
            not self.failures
            and all(c["passed"] for c in self.checks)
            and all(v for v in self.flags.values() if v is not None)
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "model": self.model_id,
            "sampling": self.sampling,
            "samples": len(self.records),
            "failures": len(self.failures),
            "records": self.records,
            "checks": self.checks,
            "flags": self.flags,
            "passed": self.passed,
        }


# --------------------------------------------------------------------- 공통


def _specialized(polys: Sequence[Polynomial], params: ParameterSet, model: ModelDef,
                 states: Sequence[str]) -> list[Polynomial]:
    values = model.validate(params)
    return [p.subs(values).restrict_context(tuple(states)) for p in polys]


def _state_entry(point: AlgebraicPoint, label: str) -> dict[str, Any]:
    entry = point.to_dict()
    entry["label"] = label
    return entry


def _ray_polynomial(params: ParameterSet, model: ModelDef, names: Sequence[str], var: str) -> Polynomial:
    """광선 정의다항식을 var 변수 다항식으로"""
    defining, _ = model.steady_state_ray(params)
    return Polynomial.from_dense(list(defining), tuple(names), var)


def _differences_vanish(point: AlgebraicPoint, pairs: Sequence[tuple[str, str]]) -> bool:
    names = point.names
    return all(
        point.vanishes(Polynomial.variable(names, a) - Polynomial.variable(names, b))
        for a, b in pairs
    )


def _solution_summary(solution: ZeroDimSolution) -> dict[str, Any]:
    return {
        "eliminant_degree": len(solution.eliminant) - 1,
        "real_solutions": len(solution.points),
        "separating_form": (
            [str(c) for c in solution.separating_form] if solution.separating_form else None
        ),
        "pairs_processed": solution.pairs_processed,
    }


# 모델별 (유일성 검사, 대칭 검사) 키
_CHECK_KEYS = {
    "rep3d": ("matches_closed_form", "matches_closed_form"),
    "fwd6d": ("matches_closed_form", "symmetric"),
    "bwd6d": ("direct_solve_matches", "direct_solve_matches"),
}


def conclusion_flags(model_id: str, records: Sequence[dict]) -> dict[str, Optional[bool]]:
    """
    표본 레코드에서 결론 플래그 집계

    실패한 표본이 하나라도 있으면 unique_positive는 거짓이다.
    """
    unique_key, symmetric_key = _CHECK_KEYS[model_id]
    ok = [r for r in records if r["success"]]
    unique = bool(records) and len(ok) == len(records) and all(
        r["checks"]["positive_count"] == 1 and r["checks"][unique_key] for r in ok
    )
    if model_id == "fwd6d":
        unique = unique and all(r["checks"]["full_system_vanishes"] for r in ok)
    return {
        FLAG_UNIQUE: unique,
        FLAG_SYMMETRIC: bool(ok) and all(r["checks"][symmetric_key] for r in ok),
        FLAG_NO_J1: all(r["checks"]["j1_no_positive"] for r in ok) if model_id == "bwd6d" else None,
    }


def _single_report(model_id: str, params: ParameterSet, record: dict) -> CertificateReport:
    record = {"index": 0, "params": params.to_dict(), "success": True, "error_message": None, **record}
    return CertificateReport(
        model_id=model_id,
        sampling={"count": 1, "range": None, "seed": None},
        records=[record],
        flags=conclusion_flags(model_id, [record]),
    )


# --------------------------------------------------------------------- rep3d


def _rep3d_record(params: ParameterSet, budget: Optional[Budget]) -> dict[str, Any]:
    model = get_model("rep3d")
    model.validate(params)

    # 1. 정상상태 분자 전체를 풀기
    system = _specialized(model.stationarity_numerators(), params, model, model.states)
    solution = solve_zero_dimensional(system, budget)
    positive = solution.positive_points()

    # 2. 양의 해가 B (광선 위, 좌표가 같음) 인지
    ray = _ray_polynomial(params, model, model.states, "x")
    matches_b = [
        _differences_vanish(p, [("x", "y"), ("y", "z")]) and p.vanishes(ray) for p in positive
    ]
    return {
        "solver": _solution_summary(solution),
        "positive_states": [_state_entry(p, "B") for p in positive],
        "checks": {
            "positive_count": len(positive),
            "matches_closed_form": bool(positive) and all(matches_b),
        },
    }


def certify_rep3d(params: ParameterSet, budget: Optional[Budget] = None) -> CertificateReport:
    """
    rep3d: 양의 정상상태가 정확히 하나이고 B와 같음을 인증

    Raises:
        ModelDomainError: 양수가 아닌 파라미터
        ResourceBudgetError: 그뢰브너 예산 초과
    """
    return _single_report("rep3d", params, _rep3d_record(params, budget))


# --------------------------------------------------------------------- fwd6d


def _lift_to_full(point: AlgebraicPoint, model: ModelDef) -> AlgebraicPoint:
    """축소된 점 (x1, x3, x5)를 대칭으로 6차원 점으로"""
    kept = dict(zip(point.names, point.coordinates))
    mapping = dict(model.reduction)
    coords = tuple(kept[mapping.get(x, x)] for x in model.states)
    return AlgebraicPoint(point.defining, point.interval, coords, model.states)


def _fwd6d_record(params: ParameterSet, budget: Optional[Budget]) -> dict[str, Any]:
    model = get_model("fwd6d")
    model.validate(params)
    reduced = model.reduced_states

    # 1. 축소된 3변수 계
    system = _specialized(model.stationarity_numerators(reduced=True), params, model, reduced)
    solution = solve_zero_dimensional(system, budget)
    positive = solution.positive_points()

    # 2. 대칭 x1 = x3 = x5 와 F 광선
    ray = _ray_polynomial(params, model, reduced, reduced[0])
    symmetric = [_differences_vanish(p, [("x1", "x3"), ("x3", "x5")]) for p in positive]
    on_ray = [p.vanishes(ray) for p in positive]

    # 3. 6차원 점이 모든 정상상태 식을 만족하는지
    full_system = _specialized(model.stationarity_numerators(), params, model, model.states)
    lifted = [_lift_to_full(p, model) for p in positive]
    full_ok = [all(q.vanishes(f) for f in full_system) for q in lifted]
    return {
        "solver": _solution_summary(solution),
        "positive_states": [_state_entry(q, "F") for q in lifted],
        "checks": {
            "positive_count": len(positive),
            "symmetric": all(symmetric),
            "matches_closed_form": bool(positive) and all(on_ray),
            "full_system_vanishes": all(full_ok),
        },
    }


def certify_fwd6d(params: ParameterSet, budget: Optional[Budget] = None) -> CertificateReport:
    """
    fwd6d: 모든 양의 해가 x1 = x3 = x5 = f (F 식) 이고 정확히 하나임을 인증

    Raises:
        ModelDomainError: 양수가 아닌 파라미터
        ResourceBudgetError: 그뢰브너 예산 초과
    """
    return _single_report("fwd6d", params, _fwd6d_record(params, budget))


# --------------------------------------------------------------------- bwd6d


def j1_points(params: ParameterSet) -> tuple[list[AlgebraicPoint], Fraction]:
    """
    J1 성분 (h1, h2, h3)의 모든 실근

    h1은 x5의 3차식, h2와 h3은 각각 x3, x1에 대해 일차식이므로
    h1의 실근마다 x3, x1을 x5의 다항식으로 역대입한다.

    Returns:
        (실근 점 목록 (x1, x3, x5), h1 최고차 계수)

    Raises:
        CertificationError: 최고차 계수가 0 (g > 0 이면 불가능)
    """
    model = get_model("bwd6d")
    values = model.validate(params)
    ideal = load_ideal("components_J", "J1").specialize(values)
    names = ideal.context
    h1, h2, h3 = ideal.generators

    x5 = uv.as_dense(h1.restrict_context(("x5",)))
    lead = x5[-1] if len(x5) == 4 else Fraction(0)
    if lead == 0:
        raise CertificationError(f"h1의 최고차 계수가 0입니다 ({params})")

    # 1. h_k = c·x_k + r(x5) → x_k = −r/c
    def solve_linear(h: Polynomial, var: str) -> list[Fraction]:
        c = h.derivative(var)
        if not c.is_constant() or c.constant_value() == 0:
            raise CertificationError(f"{var}에 대한 일차 계수가 상수가 아닙니다 ({params})")
        rest = h - Polynomial.variable(names, var).scale(c.constant_value())
        return uv.scale(uv.as_dense(rest.restrict_context(("x5",))), -1 / c.constant_value())

    phi3 = solve_linear(h2, "x3")
    phi1 = solve_linear(h3, "x1")

    # 2. h1 실근 분리 후 좌표 사상 (x1, x3, x5)
    sf = uv.squarefree_part(x5)
    coords = (tuple(uv.strip(phi1)), tuple(uv.strip(phi3)), (Fraction(0), Fraction(1)))
    points = [AlgebraicPoint(tuple(sf), iv, coords, names) for iv in isolate_roots(sf)]
    return points, lead


def j2_points(params: ParameterSet) -> list[AlgebraicPoint]:
    """J2 성분: x1 = x3 = x5 이고 x5가 2g·t² + (g − 2s − b)·t − s 의 근"""
    model = get_model("bwd6d")
    defining, _ = model.steady_state_ray(params)
    return AlgebraicPoint.roots_of(defining, [1, 1, 1], model.reduced_states)


def _bwd6d_record(params: ParameterSet, budget: Optional[Budget]) -> dict[str, Any]:
    model = get_model("bwd6d")
    model.validate(params)
    reduced = model.reduced_states
    system = _specialized(model.stationarity_numerators(reduced=True), params, model, reduced)

    # 1. J1: 양의 해 없음
    branch1, lead = j1_points(params)
    j1_positive = [p for p in branch1 if p.is_positive()]
    j1_on_variety = all(all(p.vanishes(f) for f in system) for p in branch1)

    # 2. J2: F 양수, H 음수
    branch2 = j2_points(params)
    signs = [p.coordinate_signs()[0] for p in branch2]
    f_positive = sorted(signs) == [-1, 1]

    # 3. 직접 풀이로 교차 검증
    solution = solve_zero_dimensional(system, budget)
    positive = solution.positive_points()
    ray = _ray_polynomial(params, model, reduced, reduced[0])
    direct_matches = (
        len(positive) == 1
        and positive[0].vanishes(ray)
        and _differences_vanish(positive[0], [("x1", "x3"), ("x3", "x5")])
    )
    lifted = [_lift_to_full(p, model) for p in positive]
    return {
        "solver": _solution_summary(solution),
        "positive_states": [_state_entry(q, "F") for q in lifted],
        "j1": {
            "leading_coefficient": str(lead),
            "real_points": len(branch1),
            "positive_points": len(j1_positive),
            "points": [p.to_dict() for p in branch1],
        },
        "checks": {
            "positive_count": len(positive),
            "j1_no_positive": not j1_positive,
            "j1_points_on_variety": j1_on_variety,
            "j2_f_positive_h_negative": f_positive,
            "direct_solve_matches": direct_matches,
            "real_solution_count_matches": len(solution.points) == len(branch1) + len(branch2),
        },
    }


def certify_bwd6d(params: ParameterSet, budget: Optional[Budget] = None) -> CertificateReport:
    """
    bwd6d: J1 성분에 양의 해가 없고 유일한 양의 정상상태가 F임을 인증

    Raises:
        ModelDomainError: 양수가 아닌 파라미터
        CertificationError: h1 최고차 계수가 0
        ResourceBudgetError: 그뢰브너 예산 초과
    """
    return _single_report("bwd6d", params, _bwd6d_record(params, budget))


# --------------------------------------------------------------------- 표본


_RECORD_BUILDERS = {
    "rep3d": _rep3d_record,
    "fwd6d": _fwd6d_record,
    "bwd6d": _bwd6d_record,
}

_CERTIFIERS = {
    "rep3d": certify_rep3d,
    "fwd6d": certify_fwd6d,
    "bwd6d": certify_bwd6d,
}


def certify_point(item: tuple, model_id: str, max_pairs: int, max_seconds: float) -> dict[str, Any]:
    """
    표본 하나 인증 (프로세스 풀 작업 함수, 예외는 error_message로)

    Args:
        item: (인덱스, {이름: 유리수 문자열})
    """
    index, raw = item
    params = ParameterSet.from_mapping(raw)
    record: dict[str, Any] = {
        "index": index,
        "params": params.to_dict(),
        "success": True,
        "error_message": None,
    }
    try:
        record.update(_RECORD_BUILDERS[model_id](params, Budget(max_pairs, max_seconds)))
    except Exception as e:
        record["success"] = False
        record["error_message"] = f"{type(e).__name__}: {e}"
    return record


def certify(model_id: str, params: ParameterSet, budget: Optional[Budget] = None) -> CertificateReport:
    """
    모델 ID로 단일 파라미터 점 인증

    Raises:
        ValueError: 인증을 지원하지 않는 모델
    """
    if model_id not in _CERTIFIERS:
        raise ValueError(
            f"인증을 지원하지 않는 모델입니다: {model_id} (사용 가능: {', '.join(CERTIFIABLE_MODELS)})"
        )
    return _CERTIFIERS[model_id](params, budget)


def certify_samples(
    model_id: str,
    count: int,
    lo: float,
    hi: float,
    seed: int,
    jobs: Optional[int] = None,
    budget: Optional[Budget] = None,
) -> CertificateReport:
    """
    로그 균등 표본 전체 인증 (인덱스 순서로 집계)

    Args:
        model_id: rep3d, fwd6d, bwd6d
        count: 표본 수
        lo, hi: (s, b, g) 범위
        seed: 표본 시드 (필수, 보고서에 기록)
        jobs: 워커 수
        budget: 표본별 그뢰브너 예산

    Returns:
        CertificateReport (실패한 표본은 success=False 레코드)
    """
    if model_id not in _RECORD_BUILDERS:
        raise ValueError(
            f"인증을 지원하지 않는 모델입니다: {model_id} (사용 가능: {', '.join(CERTIFIABLE_MODELS)})"
        )
    if count < 1:
        raise ValueError("표본 수는 1 이상이어야 합니다.")
    budget = budget or Budget()
    model = get_model(model_id)
    samples = sample_log_uniform(model.parameters, count, lo, hi, seed)
    items = [(k, p.to_dict()) for k, p in enumerate(samples)]

    records = parallel_map(
        certify_point, items, jobs,
        model_id=model_id, max_pairs=budget.max_pairs, max_seconds=budget.max_seconds,
    )
    records.sort(key=lambda r: r["index"])

    report = CertificateReport(
        model_id=model_id,
        sampling={"count": count, "range": [lo, hi], "seed": seed},
        records=records,
        flags=conclusion_flags(model_id, records),
    )
    logger.info(
        "certify %s: 표본 %d개, 실패 %d개, 결론 %s",
        model_id, count, len(report.failures), "통과" if report.passed else "실패",
    )
    return report
