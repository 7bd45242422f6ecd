"""
감쇠 진동 지표

- 평형점 교차 횟수 (히스테리시스 띠, Hermite 보간 부분 표본 포함)
- 최대 오버슈트 비율
- 종단 잔차 ‖f(x(t_end))‖
- 감쇠율 추정 (ln|x − x*| 의 선형 회귀 기울기)
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import numpy as np

from steadycert.errors import ModelDomainError
from steadycert.models.base_model import ModelDef, ParameterSet
from steadycert.simulate.integrator import Trajectory
from steadycert.stability.classify import damping_pairs
from steadycert.stability.eigen import eigen_numeric

logger = logging.getLogger(__name__)

# 신뢰할 수 있는 분류를 위한 종단 잔차 상한
RESIDUAL_THRESHOLD = 1e-4

# 교차 히스테리시스 띠 (|x*| 대비, 하한)
BAND_RELATIVE = 1e-6
BAND_FLOOR = 1e-12

# 스텝마다 보간할 부분 표본 수
SUBSAMPLES = 4

# 이보다 느리게 줄어드는 진동은 지속 진동으로 본다
SUSTAINED_RATE = 1e-3

CLASSIFICATIONS = ("damped-oscillation", "non-oscillatory", "sustained-oscillation", "unconverged")


@dataclass
class DampingMetrics:
    """궤적 하나의 감쇠 지표"""
    target: list[float]
    crossings: list[int]
    overshoot: Optional[float]
    terminal_residual: float
    decay_rate: Optional[float]
    reliable: bool
    classification: str
    notes: list[str] = field(default_factory=list)

    @property
    def max_crossings(self) -> int:
        return max(self.crossings, default=0)

    def to_dict(self) -> dict[str, Any]:
        return {
            "target": self.target,
            "crossings": self.crossings,
            "overshoot": self.overshoot,
            "terminal_residual": self.terminal_residual,
            "decay_rate": self.decay_rate,
            "reliable": self.reliable,
            "classification": self.classification,
            "notes": self.notes,
        }


def dense_samples(tr: Trajectory, subsamples: int = SUBSAMPLES) -> tuple[np.ndarray, np.ndarray]:
    """수락된 스텝 사이에 Hermite 보간 점을 끼운 (시각, 상태)"""
    if len(tr.times) < 2:
        return tr.times.copy(), tr.states.copy()
    fractions = np.arange(subsamples) / subsamples
    times = (tr.times[:-1, None] + np.diff(tr.times)[:, None] * fractions[None, :]).ravel()
    times = np.append(times, tr.times[-1])
    return times, tr.interpolate(times)


def count_crossings(values: np.ndarray, target: float, band: float) -> int:
    """
    히스테리시스 교차 횟수

    target ± band 밖의 한쪽에서 반대쪽으로 넘어갈 때만 센다.
    """
    side = 0
    count = 0
    for v in values:
        if v > target + band:
            current = 1
        elif v < target - band:
            current = -1
        else:
            continue
        if side and current != side:
            count += 1
        side = current
    return count


def overshoot_ratio(values: np.ndarray, target: float, start: float) -> Optional[float]:
    """목표 아래에서 시작한 성분의 max (x − x*)/x* (해당 없으면 None)"""
    if start >= target or target == 0:
        return None
    return float(max(np.max(values - target) / abs(target), 0.0))


def decay_rate(times: np.ndarray, states: np.ndarray, target: np.ndarray, band: float) -> Optional[float]:
    """ln max|x − x*| 의 최소제곱 기울기의 부호 반전 (후반부 절반, 띠보다 큰 값만)"""
    distance = np.max(np.abs(states - target), axis=1)
    half = len(times) // 2
    t, d = times[half:], distance[half:]
    mask = d > max(band * 10, 1e-300)
    if mask.sum() < 3:
        return None
    slope = np.polyfit(t[mask], np.log(d[mask]), 1)[0]
    return float(-slope)


def damping_metrics(
    tr: Trajectory,
    target: Sequence[float],
    model: Optional[ModelDef] = None,
    params: Optional[ParameterSet] = None,
    residual_threshold: float = RESIDUAL_THRESHOLD,
) -> DampingMetrics:
    """
    평형점 target 대비 감쇠 지표

    Args:
        tr: 궤적
        target: 평형점 좌표
        model, params: 종단 잔차 계산용 (없으면 궤적 끝 기울기 사용)
        residual_threshold: 이보다 잔차가 크면 unreliable

    Raises:
        ValueError: target 길이가 상태 차원과 다를 때
    """
    target = np.asarray(target, dtype=float)
    if target.shape != tr.final_state.shape:
        raise ValueError(f"목표 길이 {target.shape}가 상태 {tr.final_state.shape}와 다릅니다.")
    times, states = dense_samples(tr)

    # 1. 교차 횟수와 오버슈트
    bands = np.maximum(BAND_RELATIVE * np.abs(target), BAND_FLOOR)
    crossings = [count_crossings(states[:, i], target[i], bands[i]) for i in range(len(target))]
    ratios = [overshoot_ratio(states[:, i], target[i], tr.x0[i]) for i in range(len(target))]
    ratios = [r for r in ratios if r is not None]
    overshoot = max(ratios) if ratios else None

    # 2. 종단 잔차
    if model is not None and params is not None:
        residual = model.residual(params, tr.final_state)
    else:
        residual = float(np.max(np.abs(tr.slopes[-1])))
    reliable = residual < residual_threshold
    rate = decay_rate(times, states, target, float(np.max(bands)))

    # 3. 분류
    notes = []
    if not reliable:
        notes.append(f"종단 잔차 {residual:.3g} ≥ {residual_threshold:.1g}: 수렴하지 않음")
        oscillating = max(crossings, default=0) >= 2
        sustained = oscillating and (rate is None or rate < SUSTAINED_RATE)
        classification = "sustained-oscillation" if sustained else "unconverged"
    elif max(crossings, default=0) >= 2:
        classification = "damped-oscillation"
    else:
        classification = "non-oscillatory"

    return DampingMetrics(
        target=target.tolist(),
        crossings=crossings,
        overshoot=overshoot,
        terminal_residual=residual,
        decay_rate=rate,
        reliable=reliable,
        classification=classification,
        notes=notes,
    )


def oscillation_claim(metrics: DampingMetrics, model: ModelDef, params: ParameterSet) -> dict[str, Any]:
    """
    궤적이 감쇠 진동을 보였는지와 평형점 선형화의 복소 고유값 쌍을 함께 기록

    교차가 2회 미만이면 선형화에 복소 쌍이 있어도 "not-reproduced" 로 남긴다.
    실수부가 허수부보다 크면 진동은 한 주기 안에 거의 사라진다.

    Returns:
        {"status", "classification", "crossings", "max_crossings",
         "complex_pairs", "linearization_oscillatory", "real_parts_dominate"}
    """
    pairs = damping_pairs(eigen_numeric(model.jacobian(params, metrics.target, exact=False)))
    reproduced = metrics.classification == "damped-oscillation"
    if not reproduced:
        logger.info(f"{model.model_id}: 감쇠 진동 미재현 (교차 {metrics.crossings}, 복소 쌍 {len(pairs)}개)")
    return {
        "status": "reproduced" if reproduced else "not-reproduced",
        "classification": metrics.classification,
        "crossings": metrics.crossings,
        "max_crossings": metrics.max_crossings,
        "complex_pairs": pairs,
        "linearization_oscillatory": bool(pairs),
        "real_parts_dominate": bool(pairs) and all(p["ratio"] > 1.0 for p in pairs),
    }


@dataclass
class PairwiseDecayReport:
    """짝 차이 |x_a − x_b| = |x_a(0) − x_b(0)|·e^{−gt} 검사"""
    pairs: list[dict]
    tolerance: float

    @property
    def holds(self) -> bool:
        return all(p["holds"] for p in self.pairs)

    def to_dict(self) -> dict[str, Any]:
        return {"pairs": self.pairs, "tolerance": self.tolerance, "holds": self.holds}


def pairwise_decay_check(tr: Trajectory, model: ModelDef, params: ParameterSet,
                         tolerance: float = 1e-6) -> PairwiseDecayReport:
    """
    6차원 모델에서 같은 비선형항을 공유하는 두 좌표의 차이는 e^{−gt}로 줄어든다.

    상대 오차는 max(|초기 차이|·e^{−gt}, 1) 기준으로 잰다.

    Raises:
        ModelDomainError: 대칭 축소가 없는 모델
    """
    if not model.reduction:
        raise ModelDomainError(f"{model.model_id}: 짝 감쇠 검사를 적용할 수 없는 모델입니다.")
    g = float(params.g)
    index = {x: i for i, x in enumerate(model.states)}
    pairs = []
    for dropped, kept in model.reduction:
        a, b = index[kept], index[dropped]
        diff = tr.states[:, a] - tr.states[:, b]
        expected = (tr.x0[a] - tr.x0[b]) * np.exp(-g * tr.times)
        scale = np.maximum(np.abs(expected), 1.0)
        worst = float(np.max(np.abs(diff - expected) / scale))
        pairs.append({
            "pair": [kept, dropped],
            "initial_difference": float(tr.x0[a] - tr.x0[b]),
            "max_relative_error": worst,
            "holds": worst <= tolerance,
        })
    return PairwiseDecayReport(pairs=pairs, tolerance=tolerance)
