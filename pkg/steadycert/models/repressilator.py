"""
리프레실레이터 모델 (Hill 지수 1)

- rep3d: 억제자 3개의 순환
- fwd6d: 활성자가 다음 억제자를 활성화하는 6차원 모델
- bwd6d: 활성자가 이전 억제자를 활성화하는 6차원 모델

6차원 모델의 각 식은 X(u, v, w) = s − g·u + b·v / (1 + v + w) 형태다.
"""

import math
from fractions import Fraction

from steadycert.exactalg.ratfunc import RationalFunction
from steadycert.models.base_model import ModelDef, ParameterSet, SteadyState


class Repressilator3D(ModelDef):
    """x' = s + b/(1+z) − g·x (순환)"""

    model_id = "rep3d"
    description = "3D repressilator"
    states = ("x", "y", "z")
    parameters = ("s", "b", "g")

    def _build_rhs(self) -> list[RationalFunction]:
        cycle = [("x", "z"), ("y", "x"), ("z", "y")]
        return [self._rf(f"(s - g*{u})*(1 + {w}) + b", f"1 + {w}") for u, w in cycle]

    def steady_state_ray(self, params: ParameterSet):
        values = self.validate(params)
        s, b, g = values["s"], values["b"], values["g"]
        # g·t² + (g − s)·t − (s + b)
        return [-(s + b), g - s, g], [Fraction(1)] * 3

    def closed_form_steady_states(self, params: ParameterSet) -> list[SteadyState]:
        """A (음수 좌표)와 B (양수 좌표)"""
        values = self.validate(params)
        s, b, g = (float(values[k]) for k in ("s", "b", "g"))
        u = math.sqrt(4 * b * g + (g + s) ** 2)
        low, high = self.ray_points(params)
        return [
            SteadyState(self.model_id, "A", low, low.is_positive(),
                        "(s - g - sqrt(4*b*g + (g + s)^2))/(2*g)", (s - g - u) / (2 * g)),
            SteadyState(self.model_id, "B", high, high.is_positive(),
                        "(s - g + sqrt(4*b*g + (g + s)^2))/(2*g)", (s - g + u) / (2 * g)),
        ]


class _Feedback6D(ModelDef):
    """활성자를 포함한 6차원 리프레실레이터 공통 부분"""

    states = ("x1", "x2", "x3", "x4", "x5", "x6")
    parameters = ("s", "b", "g")
    reduction = (("x2", "x1"), ("x4", "x3"), ("x6", "x5"))
    # 각 식의 (u, v, w)
    pattern: tuple[tuple[str, str, str], ...] = ()

    def _build_rhs(self) -> list[RationalFunction]:
        return [
            self._rf(f"(s - g*{u})*(1 + {v} + {w}) + b*{v}", f"1 + {v} + {w}")
            for u, v, w in self.pattern
        ]

    def steady_state_ray(self, params: ParameterSet):
        values = self.validate(params)
        s, b, g = values["s"], values["b"], values["g"]
        # 2g·t² + (g − 2s − b)·t − s
        return [-s, g - 2 * s - b, 2 * g], [Fraction(1)] * 6

    def closed_form_steady_states(self, params: ParameterSet) -> list[SteadyState]:
        """F (양수)와 H (음수)"""
        values = self.validate(params)
        s, b, g = (float(values[k]) for k in ("s", "b", "g"))
        root = math.sqrt((b - g + 2 * s) ** 2 + 8 * g * s)
        low, high = self.ray_points(params)
        return [
            SteadyState(self.model_id, "F", high, high.is_positive(),
                        "(sqrt((b - g + 2*s)^2 + 8*g*s) + b - g + 2*s)/(4*g)",
                        (root + b - g + 2 * s) / (4 * g)),
            SteadyState(self.model_id, "H", low, low.is_positive(),
                        "-(sqrt((b - g + 2*s)^2 + 8*g*s) - b + g - 2*s)/(4*g)",
                        -(root - b + g - 2 * s) / (4 * g)),
        ]


class ForwardFeedback6D(_Feedback6D):
    """활성자가 다음 억제자의 합성을 구동"""

    model_id = "fwd6d"
    description = "forward feedback 6D repressilator"
    pattern = (
        ("x1", "x2", "x5"),
        ("x2", "x2", "x5"),
        ("x3", "x4", "x1"),
        ("x4", "x4", "x1"),
        ("x5", "x6", "x3"),
        ("x6", "x6", "x3"),
    )


class BackwardFeedback6D(_Feedback6D):
    """활성자가 이전 억제자의 합성을 구동"""

    model_id = "bwd6d"
    description = "backward feedback 6D repressilator"
    pattern = (
        ("x1", "x4", "x5"),
        ("x2", "x4", "x5"),
        ("x3", "x6", "x1"),
        ("x4", "x6", "x1"),
        ("x5", "x2", "x3"),
        ("x6", "x2", "x3"),
    )
