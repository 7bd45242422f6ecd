"""
분해 검증

- I: I ⊆ I_k (k = 1, 2, 3), 실수 정상상태가 어떤 성분 위에 있는지 (coverage)
- J: J ⊆ J1, J ⊆ J2 (J1은 Q(s,b,g) 위의 소 이데알이므로 특수화에서만 검사)
- quotient: H ⊆ G, 특수화에서 H:G = ⟨1⟩, 몫의 5개 성분이 양의 파라미터에서 모두 공집합

기호 검사는 S-쌍 상한 안에서만 하고, 넘으면 특수화 검사로 대체하며 그 경로를 기록한다.
경로는 시간 상한과 무관하게 정해지므로 같은 입력은 같은 보고서를 만든다.
포함관계는 특수화 하나에서만 실패해도 반례이므로 실패로 본다.
"""

import logging
import math
from typing import Any, Optional, Sequence

from steadycert.certify.pipelines import CertificateReport, j1_points, j2_points
from steadycert.certify.solver import solve_zero_dimensional
from steadycert.errors import ResourceBudgetError
from steadycert.groebner.buchberger import Budget
from steadycert.groebner.ideals import Ideal, quotient
from steadycert.models.base_model import ParameterSet
from steadycert.realroots.algebraic import AlgebraicPoint
from steadycert.utils.data_loader import load_component_list, load_ideal
from steadycert.utils.grid import sample_log_uniform

logger = logging.getLogger(__name__)

DECOMPOSITIONS = ("I", "J", "quotient")

# 특수화 검사의 최소 표본 수
MIN_SPECIALIZATIONS = 20

# 항상 포함하는 특수화 점
FIXED_SPECIALIZATION = {"s": 1, "b": 2, "g": 3}

PARAMETERS = ("s", "b", "g")


def _check(name: str, passed: bool, path: str, **detail) -> dict[str, Any]:
    return {"name": name, "passed": bool(passed), "path": path, **detail}


def _specializations(samples: int, seed: int) -> list[ParameterSet]:
    count = max(samples, MIN_SPECIALIZATIONS)
    points = [ParameterSet.from_mapping(FIXED_SPECIALIZATION)]
    points += sample_log_uniform(PARAMETERS, count - 1, 1e-2, 1e2, seed)
    return points


def _values(params: ParameterSet) -> dict:
    return {name: params[name] for name in PARAMETERS}


def pair_budget(budget: Optional[Budget] = None) -> Budget:
    """같은 S-쌍 상한, 시간 상한 없음"""
    return Budget(max_pairs=(budget or Budget()).max_pairs, max_seconds=math.inf)


def contained_in(small: Ideal, big: Ideal, budget: Optional[Budget] = None) -> list[str]:
    """big에 속하지 않는 small의 생성원 (문자열)"""
    return [str(f) for f in small.generators if not big.contains(f, budget=budget)]


def containment_check(
    name: str,
    small: Ideal,
    big: Ideal,
    specializations: Sequence[ParameterSet],
    budget: Optional[Budget] = None,
    symbolic: bool = True,
) -> dict[str, Any]:
    """
    small ⊆ big 검사 (기호 → S-쌍 상한 초과 시 특수화)

    Returns:
        {"name", "passed", "path", ...} (path: "symbolic" 또는 "specialized")
    """
    if symbolic:
        try:
            missing = contained_in(small, big, pair_budget(budget))
            return _check(name, not missing, "symbolic", missing=missing)
        except ResourceBudgetError as e:
            logger.info("%s: 기호 검사 예산 초과 (%s), 특수화로 대체", name, e)

    failures = []
    for params in specializations:
        values = _values(params)
        missing = contained_in(small.specialize(values), big.specialize(values), budget)
        if missing:
            failures.append({"params": params.to_dict(), "missing": missing})
    return _check(
        name, not failures, "specialized",
        specializations=len(specializations), failures=failures,
    )


def _on_component(point: AlgebraicPoint, component: Ideal) -> bool:
    return all(point.vanishes(g) for g in component.generators)


def coverage_check(
    name: str,
    components: dict[str, Ideal],
    specializations: Sequence[ParameterSet],
    budget: Optional[Budget] = None,
) -> dict[str, Any]:
    """
    정상상태 식의 모든 실근이 어떤 성분 위에 있는지

    실근은 축소된 bwd6d 계 (I의 생성원)를 직접 풀어 얻는다.
    """
    ideal = load_ideal("minimal_primes_I")
    uncovered = []
    assignment: list[dict] = []
    for params in specializations:
        values = _values(params)
        solution = solve_zero_dimensional(list(ideal.specialize(values).generators), budget)
        specialized = {key: comp.specialize(values) for key, comp in components.items()}
        for point in solution.points:
            hits = [key for key, comp in specialized.items() if _on_component(point, comp)]
            if not hits:
                uncovered.append({"params": params.to_dict(), "point": point.to_dict()})
            assignment.append({"params": params.to_dict(), "components": hits})
    return _check(name, not uncovered, "specialized", uncovered=uncovered, assignment=assignment)


# --------------------------------------------------------------------- I, J


def _verify_i(specializations, budget) -> list[dict]:
    ideal = load_ideal("minimal_primes_I")
    components = {key: load_ideal("minimal_primes_I", key) for key in ("I1", "I2", "I3")}
    checks = [
        containment_check(f"I ⊆ {key}", ideal, comp, specializations, budget)
        for key, comp in components.items()
    ]
    checks.append(coverage_check("coverage(I1, I2, I3)", components, specializations, budget))
    return checks


def _verify_j(specializations, budget) -> list[dict]:
    ideal = load_ideal("minimal_primes_I")
    components = {key: load_ideal("components_J", key) for key in ("J1", "J2")}
    checks = [
        containment_check(f"J ⊆ {key}", ideal, comp, specializations, budget, symbolic=False)
        for key, comp in components.items()
    ]
    checks.append(coverage_check("coverage(J1, J2)", components, specializations, budget))

    # J1/J2 파이프라인의 점이 각 성분 위에 있는지
    off = []
    for params in specializations:
        values = _values(params)
        branch1, _ = j1_points(params)
        on1 = all(_on_component(p, components["J1"].specialize(values)) for p in branch1)
        on2 = all(_on_component(p, components["J2"].specialize(values)) for p in j2_points(params))
        if not (on1 and on2):
            off.append(params.to_dict())
    checks.append(_check("pipeline points on J1/J2", not off, "specialized", failures=off))
    return checks


# --------------------------------------------------------------------- H:G


def quotient_component_check(specializations: Sequence[ParameterSet]) -> dict[str, Any]:
    """몫의 5개 성분 각각이 양의 파라미터에서 단위 이데알인지"""
    components = load_component_list("quotient_components")
    failures = []
    for params in specializations:
        values = _values(params)
        nonempty = [k for k, comp in enumerate(components) if not comp.specialize(values).is_unit()]
        if nonempty:
            failures.append({"params": params.to_dict(), "components": nonempty})
    return _check(
        "H:G components empty", not failures, "specialized",
        components=len(components), failures=failures,
    )


def _verify_quotient(specializations, budget) -> list[dict]:
    h = load_ideal("components_J", "J1")
    g = load_ideal("minimal_primes_I", "I2")
    checks = [containment_check("H ⊆ G", h, g, specializations, budget)]

    failures = []
    for params in specializations:
        values = _values(params)
        try:
            q = quotient(h.specialize(values), g.specialize(values), budget)
        except ResourceBudgetError as e:
            failures.append({"params": params.to_dict(), "error": "ResourceBudgetError", "pairs": e.pairs})
            continue
        if not q.is_unit():
            failures.append({"params": params.to_dict(), "basis": [str(p) for p in q.generators]})
    checks.append(_check("H:G = <1>", not failures, "specialized", failures=failures))
    checks.append(quotient_component_check(specializations))
    return checks


_VERIFIERS = {
    "I": _verify_i,
    "J": _verify_j,
    "quotient": _verify_quotient,
}


def verify_decompositions(
    which: str,
    seed: int,
    samples: int = MIN_SPECIALIZATIONS,
    budget: Optional[Budget] = None,
) -> CertificateReport:
    """
    분해 검증

    Args:
        which: "I", "J", "quotient"
        seed: 특수화 표본 시드
        samples: 특수화 수 (최소 20, (1, 2, 3) 포함)
        budget: 그뢰브너 예산

    Returns:
        CertificateReport (checks에 검사별 경로와 반례)

    Raises:
        ValueError: 알 수 없는 분해 이름
    """
    if which not in _VERIFIERS:
        raise ValueError(f"알 수 없는 분해: {which} (사용 가능: {', '.join(DECOMPOSITIONS)})")
    budget = budget or Budget()
    specializations = _specializations(samples, seed)
    checks = _VERIFIERS[which](specializations, budget)
    report = CertificateReport(
        model_id="bwd6d",
        sampling={"count": len(specializations), "range": [1e-2, 1e2], "seed": seed, "which": which},
        checks=checks,
    )
    for check in checks:
        logger.info("%s: %s (%s)", check["name"], "통과" if check["passed"] else "실패", check["path"])
    return report
