"""
고유값 계산

- eigen_numeric: numpy 고유값 + 후방 오차 검사 (교차 검증용)
- eigen_closed_form: 리프레실레이터 모델의 닫힌 형태 고유값
"""

import logging
import math
from typing import Sequence

import numpy as np

from steadycert.errors import ModelDomainError, StabilityError
from steadycert.models.base_model import ModelDef, ParameterSet

logger = logging.getLogger(__name__)

# 후방 오차 허용치 (‖J‖ 대비)
BACKWARD_TOL = 1e-10


def sort_eigenvalues(values: Sequence[complex]) -> np.ndarray:
    """실수부, 허수부 순 정렬 (보고서 출력 순서 고정)"""
    arr = np.asarray(values, dtype=complex)
    idx = np.lexsort((np.round(arr.imag, 12), np.round(arr.real, 12)))
    return arr[idx]


def eigen_numeric(matrix) -> np.ndarray:
    """
    실수 정사각 행렬의 모든 고유값

    Raises:
        StabilityError: 수렴 실패 또는 후방 오차 초과
        ValueError: 정사각 행렬이 아닐 때
    """
    J = np.asarray(matrix, dtype=float)
    if J.ndim != 2 or J.shape[0] != J.shape[1]:
        raise ValueError(f"정사각 행렬이 필요합니다: {J.shape}")
    if not np.all(np.isfinite(J)):
        raise StabilityError("행렬에 유한하지 않은 값이 있습니다.")
    try:
        values, vectors = np.linalg.eig(J)
    except np.linalg.LinAlgError as e:
        raise StabilityError(f"고유값 계산이 수렴하지 않았습니다: {e}") from e

    # 후방 오차 ‖J v − λ v‖ / ‖v‖ ≤ tol · ‖J‖
    norm = max(np.linalg.norm(J, 2), 1e-300)
    for k in range(len(values)):
        v = vectors[:, k]
        residual = np.linalg.norm(J @ v - values[k] * v) / max(np.linalg.norm(v), 1e-300)
        if residual > BACKWARD_TOL * norm:
            # 결함 행렬(중복 고유값)은 고유벡터가 나빠도 고유값은 정확할 수 있으므로
            # 특이값으로 J − λI 의 특이성을 다시 확인
            sigma = np.linalg.svd(J - values[k] * np.eye(len(J)), compute_uv=False)[-1]
            if sigma > math.sqrt(BACKWARD_TOL) * norm:
                raise StabilityError(
                    f"고유값 {values[k]:.6g}의 후방 오차가 큽니다 (residual={residual:.3g})"
                )
    return sort_eigenvalues(values)


def _rep3d_closed_form(p: ParameterSet) -> dict:
    s, b, g = float(p.s), float(p.b), float(p.g)
    u = math.sqrt((g + s) ** 2 + 4 * b * g)
    d = g + s + u
    lam1 = -2 * g * u / d
    re = -g * (3 * g + 3 * s + u) / (2 * d)
    im = math.sqrt(3) * g * (g + s - u) / (2 * d)
    e = g + s - u
    kappa1 = 2 * g * u / e
    kre = -g * (3 * g + 3 * s - u) / (2 * e)
    kim = math.sqrt(3) * g * (g + s + u) / (2 * e)
    return {
        "positive": [complex(lam1), complex(re, im), complex(re, -im)],
        "nonpositive": [complex(kappa1), complex(kre, kim), complex(kre, -kim)],
    }


def _fwd6d_closed_form(p: ParameterSet, f: float) -> dict:
    b, g = float(p.b), float(p.g)
    P = (1 + 2 * f) ** 2
    re = -g + b * (2 + 3 * f) / (2 * P)
    im = math.sqrt(3) * b * f / (2 * P)
    return {
        "positive": [complex(-g)] * 3 + [complex(-g + b / P), complex(re, im), complex(re, -im)],
    }


def _bwd6d_closed_form(p: ParameterSet, f: float) -> dict:
    b, g = float(p.b), float(p.g)
    P = (1 + 2 * f) ** 2
    re = -g - b / (2 * P)
    im = math.sqrt(3) * b / (2 * (1 + 2 * f))
    return {
        "positive": [complex(-g)] * 3
        + [complex((b - g * P) / P), complex(re, im), complex(re, -im)],
    }


def eigen_closed_form(model: ModelDef, params: ParameterSet, which: str = "positive") -> np.ndarray:
    """
    닫힌 형태 고유값

    Args:
        model: rep3d, fwd6d, bwd6d
        which: "positive" (양의 정상상태) 또는 "nonpositive" (rep3d의 A)

    Raises:
        ModelDomainError: 지원하지 않는 모델 또는 점
    """
    model.validate(params)
    if model.model_id == "rep3d":
        table = _rep3d_closed_form(params)
    elif model.model_id in ("fwd6d", "bwd6d"):
        # 근 공식의 상쇄 오차를 피하려고 분리 구간을 정밀화한 값을 쓴다
        f = model.positive_steady_state(params).point.root_approx()
        builder = _fwd6d_closed_form if model.model_id == "fwd6d" else _bwd6d_closed_form
        table = builder(params, f)
    else:
        raise ModelDomainError(f"닫힌 형태 고유값이 없는 모델입니다: {model.model_id}")
    if which not in table:
        raise ModelDomainError(f"{model.model_id}: '{which}' 점의 닫힌 형태 고유값이 없습니다.")
    return sort_eigenvalues(table[which])


def relative_discrepancy(first: Sequence[complex], second: Sequence[complex]) -> float:
    """
    두 고유값 목록의 최대 상대 차이 (가장 가까운 값끼리 짝지음, 최대 절댓값 기준)

    Raises:
        ValueError: 개수가 다를 때
    """
    a = [complex(v) for v in first]
    b = [complex(v) for v in second]
    if len(a) != len(b):
        raise ValueError("고유값 개수가 다릅니다.")
    if not a:
        return 0.0
    scale = max(max(abs(v) for v in a), 1e-300)
    worst = 0.0
    for value in a:
        k = min(range(len(b)), key=lambda i: abs(b[i] - value))
        worst = max(worst, abs(b.pop(k) - value))
    return worst / scale
