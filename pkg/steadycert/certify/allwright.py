"""
rep3d 순환 되먹임 사상 Φ 검사

Φ는 x ↦ (s + b/(1+x))/g 를 세 번 합성한 뫼비우스 변환이다.
행렬 M = [[s, s+b], [g, g]] 의 세제곱이 Φ, 여섯제곱이 Φ∘Φ 에 대응한다.

- 표로 주어진 Φ (데이터 파일)를 정확히 평가하고 단조성과 Φ∘Φ 고정점을 검사
- 모델에서 다시 만든 Φ가 감소함수이고 Φ∘Φ 의 실수 고정점이 정확히 u1 > 0 > u2 이며
  u1이 B 좌표와 같음을 인증
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from steadycert.exactalg.polynomial import Polynomial
from steadycert.exactalg.rational import sign
from steadycert.models.base_model import ParameterSet
from steadycert.models.registry import get_model
from steadycert.realroots import univariate as uv
from steadycert.realroots.sturm import isolate_roots, refine, sign_at_root
from steadycert.utils.data_loader import load_fixed_points, load_rational_map

logger = logging.getLogger(__name__)

# 단조성 검사에 쓰는 u ≥ 0 표본
SAMPLE_POINTS = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5), Fraction(10), Fraction(100))

Matrix = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]

# u 자신 (오름차순 계수)
_IDENTITY = [Fraction(0), Fraction(1)]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mobius_power(m: Matrix, k: int) -> Matrix:
    result: Matrix = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    for _ in range(k):
        result = _matmul(result, m)
    return result


def feedback_matrix(s, b, g) -> Matrix:
    """x ↦ (s·x + s + b)/(g·x + g)"""
    s, b, g = Fraction(s), Fraction(b), Fraction(g)
    return ((s, s + b), (g, g))


def fixed_point_quadratic(m: Matrix) -> list[Fraction]:
    """(a·u + b)/(c·u + d) = u ⇔ c·u² + (d − a)·u − b = 0 (오름차순 계수)"""
    (a, b), (c, d) = m
    return uv.strip([-b, d - a, c])


def _root_float(interval, poly: Sequence[Fraction]) -> float:
    """분리 구간을 좁혀 얻은 근의 부동소수 값"""
    if not interval.is_exact:
        interval = refine(interval, list(poly), Fraction(1, 10**15))
    return interval.to_float()


def _map_from_dense(num: Sequence[Fraction], den: Sequence[Fraction]) -> Matrix:
    """일차/일차 유리함수의 행렬 표현"""
    num = list(num) + [Fraction(0)] * (2 - len(num))
    den = list(den) + [Fraction(0)] * (2 - len(den))
    return ((num[1], num[0]), (den[1], den[0]))


@dataclass
class AllwrightReport:
    """Φ 검사 결과"""
    params: dict
    evaluations: list[dict] = field(default_factory=list)
    tabulated: dict = field(default_factory=dict)
    rebuilt: dict = field(default_factory=dict)
    claims: dict = field(default_factory=dict)

    @property
    def rebuilt_certified(self) -> bool:
        r = self.rebuilt
        return bool(r.get("decreasing") and r.get("two_real_fixed_points")
                    and r.get("u1_equals_b") and r.get("u2_negative") and r.get("u1_fixed_by_phi"))

    def to_dict(self) -> dict[str, Any]:
        return {
            "params": self.params,
            "evaluations": self.evaluations,
            "tabulated": self.tabulated,
            "rebuilt": self.rebuilt,
            "claims": self.claims,
            "rebuilt_certified": self.rebuilt_certified,
        }


def _tabulated_section(values: dict, rep_ray: list[Fraction], b_root) -> tuple[dict, list[dict]]:
    num, den, context = load_rational_map("allwright_phi")
    remaining = tuple(v for v in context if v not in values)
    num_u = uv.as_dense(num.subs(values).restrict_context(remaining))
    den_u = uv.as_dense(den.subs(values).restrict_context(remaining))

    # 1. 표본 점에서 정확 평가 (분모 0은 기록)
    evaluations = []
    for u in SAMPLE_POINTS:
        d = uv.evaluate(den_u, u)
        if d == 0:
            evaluations.append({"u": str(u), "error": "분모가 0입니다."})
            continue
        evaluations.append({"u": str(u), "phi": str(uv.evaluate(num_u, u) / d),
                            "phi_float": float(uv.evaluate(num_u, u) / d)})

    # 2. 도함수 분자 N′D − ND′ 의 부호
    slope = uv.sub(uv.mul(uv.derivative(num_u), den_u), uv.mul(num_u, uv.derivative(den_u)))
    slope_signs = [sign(uv.evaluate(slope, u)) for u in SAMPLE_POINTS]

    # 3. Φ∘Φ 고정점이 B를 포함하는지
    matrix = _map_from_dense(num_u, den_u)
    quad = fixed_point_quadratic(_matmul(matrix, matrix))
    roots = isolate_roots(quad) if quad else []
    b_fixed = bool(quad) and sign_at_root(quad, rep_ray, b_root) == 0

    section = {
        "numerator": [str(c) for c in num_u],
        "denominator": [str(c) for c in den_u],
        "slope_signs": slope_signs,
        "increasing": all(s > 0 for s in slope_signs),
        "decreasing": all(s < 0 for s in slope_signs),
        "two_cycle_roots": [_root_float(iv, quad) for iv in roots],
        "b_is_two_cycle_root": b_fixed,
        "printed_fixed_points": load_fixed_points("allwright_phi"),
    }
    return section, evaluations


def _flipped_composition_matches() -> bool:
    """표의 Φ가 g → −g 로 바꾼 세 번 합성과 같은지 (교차곱, 기호)"""
    num, den, context = load_rational_map("allwright_phi")
    s, b, g, u = (Polynomial.variable(context, v) for v in context)
    m = ((s, s + b), (-g, -g))
    m3 = _matmul(_matmul(m, m), m)
    flipped_num = m3[0][0] * u + m3[0][1]
    flipped_den = m3[1][0] * u + m3[1][1]
    return (num * flipped_den - flipped_num * den).is_zero()


def allwright_check(params: ParameterSet) -> AllwrightReport:
    """
    Φ 검사

    Args:
        params: rep3d 파라미터 (s, b, g 양수)

    Returns:
        AllwrightReport (claims에 표의 Φ 재현 여부)

    Raises:
        ModelDomainError: 양수가 아닌 파라미터
    """
    model = get_model("rep3d")
    values = model.validate(params)
    s, b, g = values["s"], values["b"], values["g"]
    rep_ray = uv.strip(model.steady_state_ray(params)[0])
    ray_roots = isolate_roots(rep_ray)
    b_root = ray_roots[-1]
    b_closed = next(st for st in model.closed_form_steady_states(params) if st.label == "B")

    report = AllwrightReport(params=params.to_dict())

    # 1. 표로 주어진 Φ
    tabulated, evaluations = _tabulated_section(values, rep_ray, b_root)
    tabulated["matches_flipped_composition"] = _flipped_composition_matches()
    report.tabulated = tabulated
    report.evaluations = evaluations

    # 2. 다시 만든 Φ = M³
    m = feedback_matrix(s, b, g)
    phi = mobius_power(m, 3)
    det = phi[0][0] * phi[1][1] - phi[0][1] * phi[1][0]
    quad = fixed_point_quadratic(mobius_power(m, 6))
    proportional = (
        len(quad) == 3
        and quad[2] * rep_ray[1] == quad[1] * rep_ray[2]
        and quad[2] * rep_ray[0] == quad[0] * rep_ray[2]
    )
    roots = isolate_roots(quad)
    u1 = roots[-1] if roots else None
    u2 = roots[0] if len(roots) == 2 else None
    # Φ(u1) = u1: (a·u + b) − u·(c·u + d) 가 u1에서 0
    phi_fixed = fixed_point_quadratic(phi)
    report.rebuilt = {
        "matrix": [[str(x) for x in row] for row in phi],
        "determinant_sign": sign(det),
        "decreasing": det < 0,
        "two_real_fixed_points": len(roots) == 2,
        "fixed_point_quadratic_proportional_to_ray": proportional,
        "u1": _root_float(u1, quad) if u1 is not None else None,
        "u2": _root_float(u2, quad) if u2 is not None else None,
        "u1_equals_b": (
            u1 is not None
            and sign_at_root(_IDENTITY, quad, u1) > 0
            and sign_at_root(rep_ray, quad, u1) == 0
        ),
        "u2_negative": u2 is not None and sign_at_root(_IDENTITY, quad, u2) < 0,
        "u1_fixed_by_phi": u1 is not None and sign_at_root(phi_fixed, quad, u1) == 0,
        "b_closed_form": b_closed.closed_form_value,
    }

    # 3. 주장 재현 여부
    reproduced = tabulated["decreasing"] and tabulated["b_is_two_cycle_root"]
    report.claims = {
        "tabulated_phi_decreasing_with_fixed_points_u1_u2": {
            "status": "reproduced" if reproduced else "not-reproduced",
            "holds_for_rebuilt_map": report.rebuilt_certified,
        },
    }
    if not reproduced:
        logger.warning("표의 Φ가 감소함수/고정점 주장을 재현하지 않습니다 (다시 만든 사상으로 인증)")
    return report
