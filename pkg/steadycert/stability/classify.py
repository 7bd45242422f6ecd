"""
양의 정상상태 안정성 분류

정확한 판정:
    야코비안에 정상상태 좌표 사상 φ(t)를 대입하고 (t 하나의 유리함수),
    Berkowitz로 특성다항식 계수, Hurwitz 행렬식을 t의 유리함수로 만든 뒤
    정의다항식의 근 r에서 분자와 분모 인수의 부호를 Sturm으로 판정한다.
부동소수 계산(고유값, 계수 값)은 보고용이다.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Union

import numpy as np

from steadycert.errors import ModelDomainError
from steadycert.exactalg.linalg import berkowitz
from steadycert.exactalg.polynomial import Polynomial
from steadycert.exactalg.ratfunc import RationalFunction
from steadycert.exactalg.rational import sign
from steadycert.models.base_model import CURVE_VAR, ModelDef, ParameterSet, SteadyState
from steadycert.realroots import univariate as uv
from steadycert.realroots.algebraic import AlgebraicPoint
from steadycert.realroots.sturm import sign_at_root
from steadycert.stability.eigen import eigen_closed_form, eigen_numeric, relative_discrepancy
from steadycert.stability.hurwitz import hurwitz_minors

logger = logging.getLogger(__name__)

# 경계(marginal) 판정 허용치: |max Re λ| < MARGINAL_TOL · scale
MARGINAL_TOL = 1e-9

VERDICTS = ("asymptotically-stable", "unstable", "marginal")

CurveValue = Union[int, Fraction, Polynomial, RationalFunction]


# --------------------------------------------------------------------- 점 위 부호


def curve_sign(value: CurveValue, point: AlgebraicPoint) -> int:
    """
    CURVE_VAR 유리함수의 점 위 정확한 부호

    Raises:
        ModelDomainError: 분모 인수가 그 점에서 0일 때
    """
    if isinstance(value, (int, Fraction)):
        return sign(value)
    if isinstance(value, Polynomial):
        value = RationalFunction(value)
    defining = list(point.defining)
    result = 1
    for k, (poly, power) in enumerate(value.sign_factors()):
        s = sign_at_root(uv.as_dense(poly), defining, point.interval)
        if s == 0:
            if k == 0:
                return 0
            raise ModelDomainError(f"분모 인수 {poly}가 정상상태에서 0입니다.")
        if power % 2 and s < 0:
            result = -result
    return result


def curve_float(value: CurveValue, t: float) -> float:
    """CURVE_VAR 유리함수의 부동소수 값"""
    if isinstance(value, (int, Fraction)):
        return float(value)
    if isinstance(value, Polynomial):
        return uv.evaluate_float(uv.as_dense(value), t)
    den = 1.0
    for atom, power in value.factors.items():
        den *= uv.evaluate_float(uv.as_dense(atom), t) ** power
    return uv.evaluate_float(uv.as_dense(value.numerator), t) / den


@dataclass
class ExactHurwitzData:
    """점 위 특성다항식 계수와 Hurwitz 행렬식 (t의 유리함수 + 정확한 부호)"""
    coefficients: list[Any]
    coefficient_signs: list[int]
    deltas: list[Any]
    delta_signs: list[int]
    an_sign: int

    @property
    def hurwitz_stable(self) -> bool:
        return self.an_sign > 0 and all(s > 0 for s in self.delta_signs)


def exact_hurwitz_data(model: ModelDef, params: ParameterSet, point: AlgebraicPoint) -> ExactHurwitzData:
    """
    점에서 a1..an 과 Δ1..Δ_{n−1}의 정확한 부호

    Returns:
        ExactHurwitzData (계수는 내림차순 [1, a1, ..., an])
    """
    # 1. φ(t)를 대입한 야코비안과 특성다항식 계수
    matrix = model.jacobian_along(params, point)
    coeffs = berkowitz(matrix)
    n = len(coeffs) - 1

    # 2. Hurwitz 행렬식 Δ1..Δ_{n−1} (Δn = an·Δ_{n−1})
    deltas = hurwitz_minors(coeffs, count=n - 1) if n > 1 else []

    # 3. 근에서의 부호
    coefficient_signs = [curve_sign(c, point) for c in coeffs]
    delta_signs = [curve_sign(d, point) for d in deltas]
    return ExactHurwitzData(coeffs, coefficient_signs, deltas, delta_signs, coefficient_signs[-1])


# --------------------------------------------------------------------- 보고서


@dataclass
class StabilityReport:
    """양의 정상상태 안정성 보고서"""
    model_id: str
    params: ParameterSet
    steady_state: SteadyState
    coefficients: list[float]
    coefficients_exact: list[str]
    coefficient_signs: list[int]
    hurwitz: list[float]
    hurwitz_signs: list[int]
    an: float
    an_sign: int
    eigenvalues: np.ndarray
    verdict: str
    max_real: float
    consistent: bool
    damping: list[dict] = field(default_factory=list)
    closed_form_eigenvalues: Optional[np.ndarray] = None
    closed_form_discrepancy: Optional[float] = None
    other_states: list[dict] = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    claims: dict = field(default_factory=dict)

    @property
    def stable(self) -> bool:
        return self.verdict == "asymptotically-stable"

    def to_dict(self) -> dict[str, Any]:
        data = {
            "model": self.model_id,
            "params": self.params.to_dict(),
            "steady_state": self.steady_state.to_dict(),
            "char_poly": {
                "coefficients": self.coefficients,
                "exact": self.coefficients_exact,
                "signs": self.coefficient_signs,
                "variable": CURVE_VAR,
            },
            "hurwitz": {"values": self.hurwitz, "signs": self.hurwitz_signs},
            "an": {"value": self.an, "sign": self.an_sign},
            "eigenvalues": complex_list(self.eigenvalues),
            "verdict": self.verdict,
            "max_real": self.max_real,
            "consistent": self.consistent,
            "damping": self.damping,
            "other_states": self.other_states,
            "checks": self.checks,
            "claims": self.claims,
        }
        if self.closed_form_eigenvalues is not None:
            data["closed_form"] = {
                "eigenvalues": complex_list(self.closed_form_eigenvalues),
                "discrepancy": self.closed_form_discrepancy,
            }
        return data


def complex_list(values) -> list[list[float]]:
    """복소수 배열 → [[re, im], ...]"""
    return [[float(np.real(v)), float(np.imag(v))] for v in values]


def damping_pairs(eigenvalues: np.ndarray) -> list[dict]:
    """허수부가 양수인 복소 고유값마다 |Re|, |Im|, 비율"""
    scale = max(float(np.max(np.abs(eigenvalues))), 1e-300) if len(eigenvalues) else 1.0
    pairs = []
    for value in eigenvalues:
        if value.imag > 1e-12 * scale:
            re, im = abs(float(value.real)), float(value.imag)
            pairs.append({"real": float(value.real), "imag": im, "abs_real": re, "abs_imag": im, "ratio": re / im})
    return pairs


def decide_verdict(hurwitz_stable: bool, eigenvalues: np.ndarray) -> tuple[str, float, bool]:
    """
    정확한 Hurwitz 판정 + 부동소수 max Re λ 로 판정

    Returns:
        (verdict, max_real, consistent)
    """
    max_real = float(np.max(eigenvalues.real))
    scale = max(float(np.max(np.abs(eigenvalues))), 1e-300)
    tol = MARGINAL_TOL * scale
    if hurwitz_stable:
        verdict = "asymptotically-stable"
    elif max_real > tol:
        verdict = "unstable"
    else:
        verdict = "marginal"
    consistent = not (hurwitz_stable and max_real > tol) and not (not hurwitz_stable and max_real < -tol)
    if not consistent:
        logger.warning("Hurwitz 판정과 고유값 판정이 다릅니다 (max Re = %.3g)", max_real)
    return verdict, max_real, consistent


# --------------------------------------------------------------------- 모델별 검사


def _rep3d_claims(damping: list[dict]) -> dict:
    """|Re λ2,3| ≥ |Im λ2,3| 주장을 이 점에서 계산"""
    if not damping:
        return {}
    ratio = damping[0]["ratio"]
    return {
        "abs_real_not_below_abs_imag": {
            "ratio": ratio,
            "holds": ratio >= 1.0,
            "status": "reproduced" if ratio >= 1.0 else "not-reproduced",
        }
    }


def _rep3d_other_states(model: ModelDef, params: ParameterSet) -> list[dict]:
    """음수 좌표 정상상태 A의 고유값 (닫힌 형태 + 수치)"""
    result = []
    for state in model.closed_form_steady_states(params):
        if state.positive:
            continue
        numeric = eigen_numeric(model.jacobian(params, state.coordinates(), exact=False))
        closed = eigen_closed_form(model, params, "nonpositive")
        result.append({
            "label": state.label,
            "coordinates": [float(v) for v in state.coordinates()],
            "eigenvalues": complex_list(numeric),
            "closed_form_eigenvalues": complex_list(closed),
            "discrepancy": relative_discrepancy(closed, numeric),
        })
    return result


def bwd6d_factor_polynomial(params: ParameterSet) -> list[RationalFunction]:
    """
    bwd6d 양의 정상상태 f에서 인수분해된 특성다항식의 계수 (t = f의 유리함수, 내림차순)

    (λ + g)³ (−b + g·P + λ·P) (P²λ² + P(b + 2gP)λ + g²P² + bgP + b²(1 + 3t + 3t²)) / P³,
    P = (1 + 2t)²
    """
    ctx = ("lam", CURVE_VAR)
    lam = Polynomial.variable(ctx, "lam")
    t = Polynomial.variable(ctx, CURVE_VAR)
    b, g = params.b, params.g
    P = (1 + 2 * t) ** 2
    linear = -b + g * P + lam * P
    quadratic = P ** 2 * lam ** 2 + P * (b + 2 * g * P) * lam + g ** 2 * P ** 2 + b * g * P + b ** 2 * (1 + 3 * t + 3 * t ** 2)
    product = (lam + g) ** 3 * linear * quadratic
    coeffs: dict[int, Polynomial] = {}
    for coef, (e_lam, e_t) in product.terms:
        mon = Polynomial((CURVE_VAR,), [(coef, (e_t,))])
        coeffs[e_lam] = coeffs.get(e_lam, Polynomial.zero((CURVE_VAR,))) + mon
    p1 = Polynomial((CURVE_VAR,), [(1, (0,)), (2, (1,))])
    degree = max(coeffs)
    return [
        RationalFunction(coeffs.get(k, Polynomial.zero((CURVE_VAR,)))).divide_by(p1, 6)
        for k in range(degree, -1, -1)
    ]


def bwd6d_checks(model: ModelDef, params: ParameterSet, point: AlgebraicPoint, data: ExactHurwitzData) -> dict:
    """
    bwd6d 고유 검사

    - 특성다항식이 인수분해 형태와 같은지 (계수 차이가 근에서 0)
    - 일차 인수 근이 음수: −b + g(1 + 2f)² > 0
    - 이차 인수 판별식 −3b²(1 + 2f)⁶ < 0
    """
    expected = bwd6d_factor_polynomial(params)
    factorization = len(expected) == len(data.coefficients) and all(
        curve_sign(c - e, point) == 0
        for c, e in zip(data.coefficients, expected)
    )
    t = Polynomial.variable((CURVE_VAR,), CURVE_VAR)
    linear = -params.b + params.g * (1 + 2 * t) ** 2
    discriminant = -3 * params.b ** 2 * (1 + 2 * t) ** 6
    return {
        "factorization_matches": factorization,
        "linear_factor_positive": curve_sign(linear, point) > 0,
        "quadratic_discriminant_negative": curve_sign(discriminant, point) < 0,
    }


def quadratic_discriminant_identity() -> Polynomial:
    """
    bwd6d 이차 인수의 판별식과 −3b²(1 + 2f)⁶ 의 차이 (b, g, f 의 다항식)

    항등식이면 0 다항식이다.
    """
    ctx = ("b", "g", "f")
    b, g, f = (Polynomial.variable(ctx, v) for v in ctx)
    P = (1 + 2 * f) ** 2
    A = P ** 2
    B = P * (b + 2 * g * P)
    C = g ** 2 * P ** 2 + b * g * P + b ** 2 * (1 + 3 * f + 3 * f ** 2)
    return (B ** 2 - 4 * A * C) - (-3 * b ** 2 * (1 + 2 * f) ** 6)


# --------------------------------------------------------------------- 분류


def classify(model: ModelDef, params: ParameterSet) -> StabilityReport:
    """
    양의 정상상태의 안정성 보고서

    Args:
        model: 모델 정의
        params: 양의 파라미터

    Returns:
        StabilityReport

    Raises:
        ModelDomainError: 파라미터 오류
        CertificationError: 양의 정상상태가 하나가 아닐 때
        StabilityError: 고유값 계산 실패
    """
    # 1. 양의 정상상태 (정확한 대수적 점)
    steady = model.positive_steady_state(params)
    point = steady.point

    # 2. 정확한 특성다항식 계수와 Hurwitz 부호
    data = exact_hurwitz_data(model, params, point)
    t = point.root_approx()

    # 3. 수치 고유값
    coords = point.approx()
    eigenvalues = eigen_numeric(model.jacobian(params, coords, exact=False))
    verdict, max_real, consistent = decide_verdict(data.hurwitz_stable, eigenvalues)
    damping = damping_pairs(eigenvalues)

    report = StabilityReport(
        model_id=model.model_id,
        params=params,
        steady_state=steady,
        coefficients=[curve_float(c, t) for c in data.coefficients],
        coefficients_exact=[str(c) for c in data.coefficients],
        coefficient_signs=data.coefficient_signs,
        hurwitz=[curve_float(d, t) for d in data.deltas],
        hurwitz_signs=data.delta_signs,
        an=curve_float(data.coefficients[-1], t),
        an_sign=data.an_sign,
        eigenvalues=eigenvalues,
        verdict=verdict,
        max_real=max_real,
        consistent=consistent,
        damping=damping,
    )

    # 4. 닫힌 형태와 모델별 검사
    if model.model_id in ("rep3d", "fwd6d", "bwd6d"):
        closed = eigen_closed_form(model, params)
        report.closed_form_eigenvalues = closed
        report.closed_form_discrepancy = relative_discrepancy(closed, eigenvalues)
    if model.model_id == "rep3d":
        report.claims = _rep3d_claims(damping)
        report.other_states = _rep3d_other_states(model, params)
    if model.model_id == "bwd6d":
        report.checks = bwd6d_checks(model, params, point, data)

    logger.info("%s %s: %s (max Re = %.3g)", model.model_id, params, verdict, max_real)
    return report
