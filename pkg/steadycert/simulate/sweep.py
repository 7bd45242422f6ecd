"""
파라미터 격자 스윕

격자점마다 양의 정상상태 안정성(정확한 Hurwitz 판정)과
시뮬레이션 감쇠 분류를 계산해 안정성/진동 지도를 만든다.
격자점 오류는 기록하고 스윕은 계속한다.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

import numpy as np
import pandas as pd

from steadycert.models.base_model import ModelDef, ParameterSet
from steadycert.models.registry import get_model
from steadycert.simulate.integrator import integrate
from steadycert.simulate.metrics import damping_metrics
from steadycert.stability.classify import classify
from steadycert.utils.grid import ParameterGrid
from steadycert.utils.parallel import parallel_map

logger = logging.getLogger(__name__)

DEFAULT_X0_POLICY = "perturb:0.1"


@dataclass(frozen=True)
class InitialStatePolicy:
    """
    초기 상태 정책

    - fixed:<v1,v2,...>  모든 격자점에서 같은 초기 상태
    - perturb:<rel>      양의 정상상태 x*를 x*·(1 + rel·u), u ~ U(−1, 1) 로 흔듦 (시드 고정)
    """
    kind: str
    vector: tuple[float, ...] = ()
    relative: float = 0.0

    @classmethod
    def parse(cls, text: str) -> "InitialStatePolicy":
        """
        Raises:
            ValueError: 형식 오류
        """
        kind, _, body = text.partition(":")
        if kind == "fixed":
            try:
                vector = tuple(float(v) for v in body.split(","))
            except ValueError:
                raise ValueError(f"fixed 초기 상태를 읽을 수 없습니다: {body!r}")
            if not vector or any(v <= 0 for v in vector):
                raise ValueError("fixed 초기 상태는 양수 벡터여야 합니다.")
            return cls("fixed", vector=vector)
        if kind == "perturb":
            try:
                rel = float(body)
            except ValueError:
                raise ValueError(f"perturb 비율을 읽을 수 없습니다: {body!r}")
            if not 0 <= rel < 1:
                raise ValueError("perturb 비율은 0 이상 1 미만이어야 합니다.")
            return cls("perturb", relative=rel)
        raise ValueError(f"알 수 없는 초기 상태 정책입니다: {text!r} (fixed:... 또는 perturb:...)")

    def initial_state(self, target: np.ndarray, seed: int, flat_index: int) -> np.ndarray:
        if self.kind == "fixed":
            if len(self.vector) != len(target):
                raise ValueError(f"초기 상태 길이 {len(self.vector)} != {len(target)}")
            return np.array(self.vector)
        rng = np.random.default_rng([seed, flat_index])
        return target * (1 + self.relative * rng.uniform(-1, 1, size=len(target)))


def sweep_point(
    item: tuple,
    model_id: str,
    hill: int,
    policy: str,
    seed: int,
    t_end: Optional[float],
    simulate: bool,
) -> dict[str, Any]:
    """
    격자점 하나 (프로세스 풀 작업 함수)

    Args:
        item: (평탄 인덱스, 격자 인덱스, {이름: 유리수 문자열})
    """
    flat, index, raw = item
    params = ParameterSet.from_mapping(raw)
    record: dict[str, Any] = {
        "index": list(index),
        "params": params.to_dict(),
        "success": True,
        "error_message": None,
        "verdict": None,
        "max_real": None,
        "classification": None,
        "max_crossings": None,
        "overshoot": None,
    }
    try:
        model = get_model(model_id, hill)
        report = classify(model, params)
        record["verdict"] = report.verdict
        record["max_real"] = report.max_real
        if simulate:
            target = report.steady_state.coordinates()
            x0 = InitialStatePolicy.parse(policy).initial_state(target, seed, flat)
            tr = integrate(model, params, x0, t_end)
            metrics = damping_metrics(tr, target, model, params)
            record["classification"] = metrics.classification
            record["max_crossings"] = metrics.max_crossings
            record["overshoot"] = metrics.overshoot
    except Exception as e:
        record["success"] = False
        record["error_message"] = f"{type(e).__name__}: {e}"
    return record


@dataclass
class SweepResult:
    """스윕 결과 (격자 순서)"""
    model_id: str
    grid: dict
    policy: str
    seed: int
    records: list[dict] = field(default_factory=list)

    @property
    def failures(self) -> list[dict]:
        return [r for r in self.records if not r["success"]]

    def verdict_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for r in self.records:
            key = r["verdict"] or "error"
            counts[key] = counts.get(key, 0) + 1
        return dict(sorted(counts.items()))

    def to_frame(self) -> pd.DataFrame:
        """격자점마다 한 행: 파라미터, 판정, max Re λ, 교차 횟수"""
        rows = []
        for r in self.records:
            row = {"index": ";".join(str(i) for i in r["index"])}
            row.update({name: float(Fraction(value)) for name, value in r["params"].items()})
            row.update({
                "verdict": r["verdict"],
                "max_real": r["max_real"],
                "classification": r["classification"],
                "max_crossings": r["max_crossings"],
                "error": r["error_message"],
            })
            rows.append(row)
        return pd.DataFrame(rows)

    def to_csv(self, path) -> None:
        self.to_frame().to_csv(path, index=False, float_format="%.10g")

    def to_dict(self) -> dict[str, Any]:
        return {
            "model": self.model_id,
            "grid": self.grid,
            "x0_policy": self.policy,
            "seed": self.seed,
            "points": len(self.records),
            "failures": len(self.failures),
            "verdicts": self.verdict_counts(),
            "records": self.records,
        }


def sweep(
    model: ModelDef,
    grid: ParameterGrid,
    policy: str = DEFAULT_X0_POLICY,
    seed: int = 0,
    t_end: Optional[float] = None,
    simulate: bool = True,
    jobs: Optional[int] = None,
) -> SweepResult:
    """
    격자 스윕

    Args:
        model: 모델 정의 (Hill 모델은 지수 n이 정해진 인스턴스)
        grid: 파라미터 격자
        policy: 초기 상태 정책 문자열
        seed: perturb 정책 시드
        t_end: 적분 구간 (None이면 모델 기본값)
        simulate: False면 안정성 판정만
        jobs: 워커 수

    Raises:
        ValueError: 초기 상태 정책 형식 오류
    """
    InitialStatePolicy.parse(policy)
    items = [(flat, index, p.to_dict()) for flat, (index, p) in enumerate(grid.points())]
    records = parallel_map(
        sweep_point, items, jobs,
        model_id=model.model_id, hill=getattr(model, "n", 1), policy=policy,
        seed=seed, t_end=t_end, simulate=simulate,
    )
    result = SweepResult(model.model_id, grid.to_dict(), policy, seed, records)
    logger.info("sweep %s: %d점, 실패 %d, 판정 %s",
                model.model_id, len(records), len(result.failures), result.verdict_counts())
    return result
