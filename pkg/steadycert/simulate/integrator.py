"""
적응 스텝 명시적 Runge–Kutta 적분 (Dormand–Prince 5(4))

- FSAL: 마지막 스테이지 기울기를 다음 스텝 첫 스테이지로 재사용
- 오차 제어: err = ‖e / (abs_tol + rel_tol·max(|y|, |y_new|))‖_RMS ≤ 1
- 스텝 배율 0.9·err^(−1/5), [0.2, 10]으로 제한
- 초기 스텝: Hairer 방식 추정
- 양의 상한(orthant)을 벗어나면 IntegrationError
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

import numpy as np

from steadycert import config
from steadycert.errors import IntegrationError, ModelDomainError
from steadycert.models.base_model import ModelDef, ParameterSet

logger = logging.getLogger(__name__)

VectorField = Callable[[float, np.ndarray], np.ndarray]

SAFETY = 0.9
MIN_FACTOR = 0.2
MAX_FACTOR = 10.0
MAX_STEPS = 1_000_000


class DormandPrince45:
    """Dormand–Prince 5(4) 계수표 (5차 해로 진행)"""

    # 스테이지 수, 진행 차수, 내장 차수
    s = 7
    n = 5
    m = 4

    # 중간 평가 시각
    eval_stages = [0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0]

    # 확장 Butcher 표 (마지막 행 = 5차 가중치)
    BT = {
        0: [1 / 5],
        1: [3 / 40, 9 / 40],
        2: [44 / 45, -56 / 15, 32 / 9],
        3: [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
        4: [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
        5: [35 / 384, 0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
    }

    # 국소 오차 추정 계수 (5차 − 4차)
    TR = [71 / 57600, 0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40]

    def step(self, f: VectorField, t: float, y: np.ndarray, h: float,
             k0: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        한 스텝

        Returns:
            (y_new, 오차 벡터, 스테이지 기울기 행렬 (7 × n))
        """
        k = np.empty((self.s, len(y)))
        k[0] = k0
        for i in range(1, self.s):
            weights = self.BT[i - 1]
            dy = sum(w * k[j] for j, w in enumerate(weights) if w)
            y_stage = y + h * dy
            if i == self.s - 1:
                y_new = y_stage
            k[i] = f(t + self.eval_stages[i] * h, y_stage)
        error = h * sum(e * k[j] for j, e in enumerate(self.TR) if e)
        return y_new, error, k


@dataclass
class IntegratorStats:
    steps: int = 0
    rejections: int = 0
    evaluations: int = 0
    rel_tol: float = 0.0
    abs_tol: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "steps": self.steps,
            "rejections": self.rejections,
            "evaluations": self.evaluations,
            "rel_tol": self.rel_tol,
            "abs_tol": self.abs_tol,
        }


@dataclass
class Trajectory:
    """
    적분 결과

    times는 순증가, states[k]는 times[k]의 상태, slopes[k]는 그 점의 우변 값
    (3차 Hermite 보간에 사용)
    """
    model_id: str
    params: dict
    x0: np.ndarray
    times: np.ndarray
    states: np.ndarray
    slopes: np.ndarray
    names: tuple[str, ...]
    stats: IntegratorStats = field(default_factory=IntegratorStats)

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]

    @property
    def t_end(self) -> float:
        return float(self.times[-1])

    def interpolate(self, t: float | Sequence[float]) -> np.ndarray:
        """
        수락된 스텝 사이 3차 Hermite 보간

        Raises:
            ValueError: 적분 구간 밖의 시각
        """
        ts = np.atleast_1d(np.asarray(t, dtype=float))
        if ts.min() < self.times[0] or ts.max() > self.times[-1]:
            raise ValueError(f"보간 시각이 [{self.times[0]}, {self.times[-1]}] 밖입니다.")
        idx = np.clip(np.searchsorted(self.times, ts, side="right") - 1, 0, len(self.times) - 2)
        out = np.array([self._hermite(k, tk) for k, tk in zip(idx, ts)])
        return out[0] if np.ndim(t) == 0 else out

    def _hermite(self, k: int, t: float) -> np.ndarray:
        t0, t1 = self.times[k], self.times[k + 1]
        h = t1 - t0
        theta = (t - t0) / h
        y0, y1 = self.states[k], self.states[k + 1]
        f0, f1 = self.slopes[k], self.slopes[k + 1]
        h00 = 2 * theta**3 - 3 * theta**2 + 1
        h10 = theta**3 - 2 * theta**2 + theta
        h01 = -2 * theta**3 + 3 * theta**2
        h11 = theta**3 - theta**2
        return h00 * y0 + h10 * h * f0 + h01 * y1 + h11 * h * f1

    def csv_header(self) -> str:
        return ",".join(("t",) + self.names)

    def to_csv(self, path) -> None:
        """t,x1,...,xn 헤더, 수락된 스텝마다 한 행"""
        data = np.column_stack([self.times, self.states])
        np.savetxt(path, data, delimiter=",", header=self.csv_header(), comments="", fmt="%.17g")

    def to_dict(self) -> dict[str, Any]:
        return {
            "model": self.model_id,
            "params": self.params,
            "x0": self.x0.tolist(),
            "t_end": self.t_end,
            "final_state": self.final_state.tolist(),
            "points": len(self.times),
            "stats": self.stats.to_dict(),
        }


def _rms(v: np.ndarray) -> float:
    return float(np.sqrt(np.mean(v * v)))


def initial_step(f: VectorField, t0: float, y0: np.ndarray, f0: np.ndarray, order: int,
                 rel_tol: float, abs_tol: float) -> float:
    """Hairer–Nørsett–Wanner 초기 스텝 추정"""
    scale = abs_tol + rel_tol * np.abs(y0)
    d0 = _rms(y0 / scale)
    d1 = _rms(f0 / scale)
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    y1 = y0 + h0 * f0
    f1 = f(t0 + h0, y1)
    d2 = _rms((f1 - f0) / scale) / h0
    if max(d1, d2) <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** (1.0 / (order + 1))
    return min(100 * h0, h1)


def integrate_field(
    f: VectorField,
    x0: Sequence[float],
    t_end: float,
    rel_tol: Optional[float] = None,
    abs_tol: Optional[float] = None,
    max_step: Optional[float] = None,
    positive: bool = True,
    max_steps: int = MAX_STEPS,
    names: Optional[Sequence[str]] = None,
    model_id: str = "",
    params: Optional[dict] = None,
) -> Trajectory:
    """
    임의의 우변 f(t, x)를 [0, t_end]에서 적분

    Args:
        f: 부동소수 우변
        x0: 초기 상태
        t_end: 종료 시각 (> 0)
        rel_tol, abs_tol: 허용오차 (None이면 설정값)
        max_step: 최대 스텝 (None이면 t_end)
        positive: True면 양의 상한을 벗어날 때 오류

    Raises:
        ValueError: 잘못된 허용오차, 구간, 초기 상태
        IntegrationError: 스텝 언더플로, 상한 이탈, 최대 스텝 수 초과
    """
    rel_tol = config.REL_TOL if rel_tol is None else rel_tol
    abs_tol = config.ABS_TOL if abs_tol is None else abs_tol
    if rel_tol <= 0 or abs_tol <= 0:
        raise ValueError("허용오차는 양수여야 합니다.")
    if not t_end > 0:
        raise ValueError(f"t_end는 양수여야 합니다: {t_end}")
    y = np.asarray(x0, dtype=float).copy()
    if not np.all(np.isfinite(y)):
        raise ValueError("초기 상태에 유한하지 않은 값이 있습니다.")
    if positive and np.any(y <= 0):
        raise ModelDomainError(f"초기 상태가 양의 상한 밖에 있습니다: {y.tolist()}")
    names = tuple(names) if names is not None else tuple(f"x{i + 1}" for i in range(len(y)))
    max_step = t_end if max_step is None else max_step

    tableau = DormandPrince45()
    stats = IntegratorStats(rel_tol=rel_tol, abs_tol=abs_tol)
    t = 0.0
    k0 = f(t, y)
    stats.evaluations += 1
    h = min(initial_step(f, t, y, k0, tableau.n, rel_tol, abs_tol), max_step, t_end)
    stats.evaluations += 1

    times, states, slopes = [t], [y.copy()], [k0.copy()]
    while t < t_end:
        if stats.steps + stats.rejections >= max_steps:
            raise IntegrationError(f"최대 스텝 수 {max_steps}를 넘었습니다 (t={t:.6g})", t, y.tolist())
        h = min(h, t_end - t)
        if h <= 16 * np.finfo(float).eps * max(abs(t), 1.0):
            raise IntegrationError(f"스텝 크기 언더플로 (t={t:.6g}, h={h:.3g})", t, y.tolist())

        # 1. 한 스텝 시도
        y_new, error, k = tableau.step(f, t, y, h, k0)
        stats.evaluations += tableau.s - 1
        scale = abs_tol + rel_tol * np.maximum(np.abs(y), np.abs(y_new))
        err = _rms(error / scale)
        if not np.isfinite(err):
            err = np.inf

        # 2. 수락/거절과 다음 스텝 크기
        if err <= 1.0:
            t_new = t + h if t_end - (t + h) > 1e-12 * t_end else t_end
            if positive and np.any(y_new <= 0):
                raise IntegrationError(
                    f"양의 상한을 벗어났습니다 (t={t_new:.6g}, x={y_new.tolist()})", t_new, y_new.tolist()
                )
            t, y, k0 = t_new, y_new, k[-1]
            times.append(t)
            states.append(y.copy())
            slopes.append(k0.copy())
            stats.steps += 1
        else:
            stats.rejections += 1
        factor = MAX_FACTOR if err == 0 else SAFETY * err ** (-1.0 / tableau.n)
        h = min(h * min(MAX_FACTOR, max(MIN_FACTOR, factor)), max_step)

    logger.debug("적분 완료: 스텝 %d, 거절 %d", stats.steps, stats.rejections)
    return Trajectory(
        model_id=model_id,
        params=params or {},
        x0=np.asarray(x0, dtype=float),
        times=np.array(times),
        states=np.array(states),
        slopes=np.array(slopes),
        names=names,
        stats=stats,
    )


def integrate(
    model: ModelDef,
    params: ParameterSet,
    x0: Sequence[float],
    t_end: Optional[float] = None,
    rel_tol: Optional[float] = None,
    abs_tol: Optional[float] = None,
    max_step: Optional[float] = None,
) -> Trajectory:
    """
    모델 적분

    Args:
        t_end: None이면 모델별 기본값

    Raises:
        ModelDomainError: 파라미터/초기 상태 오류
        IntegrationError: 적분 실패
    """
    if len(x0) != model.dimension:
        raise ModelDomainError(f"{model.model_id}: 초기 상태 길이 {len(x0)} != {model.dimension}")
    if t_end is None:
        t_end = config.DEFAULT_T_END.get(model.model_id, 100.0)
    model.validate(params)
    return integrate_field(
        model.vector_field(params),
        x0,
        t_end,
        rel_tol=rel_tol,
        abs_tol=abs_tol,
        max_step=max_step,
        names=model.states,
        model_id=model.model_id,
        params=params.to_dict(),
    )
