"""
모델 레지스트리

모델 ID로 ModelDef 인스턴스를 얻는다. Hill 모델은 지수 n별로 따로 만든다.
"""

from functools import lru_cache
from typing import Optional

from steadycert.models.base_model import ModelDef, ParameterSet
from steadycert.models.hill import ElowitzLeiblerModel, GoodwinModel, RelaxationModel
from steadycert.models.repressilator import (
    BackwardFeedback6D,
    ForwardFeedback6D,
    Repressilator3D,
)

_FIXED = {
    "rep3d": Repressilator3D,
    "fwd6d": ForwardFeedback6D,
    "bwd6d": BackwardFeedback6D,
    "relax1d": RelaxationModel,
}

_HILL = {
    "goodwin": GoodwinModel,
    "elowitz": ElowitzLeiblerModel,
}

MODEL_IDS = tuple(_FIXED) + tuple(_HILL)

# 리프레실레이터 모델 (파라미터 s, b, g)
REPRESSILATOR_MODELS = ("rep3d", "fwd6d", "bwd6d")


@lru_cache(maxsize=None)
def get_model(model_id: str, hill: int = 1) -> ModelDef:
    """
    모델 인스턴스 (캐시)

    Raises:
        ValueError: 알 수 없는 모델 ID
    """
    if model_id in _FIXED:
        return _FIXED[model_id]()
    if model_id in _HILL:
        return _HILL[model_id](hill)
    raise ValueError(f"알 수 없는 모델: {model_id} (사용 가능: {', '.join(MODEL_IDS)})")


def resolve_model(model_id: str, params: Optional[ParameterSet] = None) -> ModelDef:
    """파라미터의 n을 Hill 지수로 사용"""
    hill = params.hill() if params is not None and model_id in _HILL else 1
    return get_model(model_id, hill)


def list_models() -> list[str]:
    return list(MODEL_IDS)
