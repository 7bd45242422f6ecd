"""ODE 모델 정의와 정상상태"""

from steadycert.models.base_model import CURVE_VAR, ModelDef, ParameterSet, SteadyState
from steadycert.models.hill import ElowitzLeiblerModel, GoodwinModel, RelaxationModel
from steadycert.models.registry import MODEL_IDS, REPRESSILATOR_MODELS, get_model, list_models, resolve_model
from steadycert.models.repressilator import (
    BackwardFeedback6D,
    ForwardFeedback6D,
    Repressilator3D,
)

__all__ = [
    "CURVE_VAR",
    "MODEL_IDS",
    "REPRESSILATOR_MODELS",
    "BackwardFeedback6D",
    "ElowitzLeiblerModel",
    "ForwardFeedback6D",
    "GoodwinModel",
    "ModelDef",
    "ParameterSet",
    "RelaxationModel",
    "Repressilator3D",
    "SteadyState",
    "get_model",
    "list_models",
    "resolve_model",
]
