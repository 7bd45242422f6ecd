"""
Hill 지수 n 모델과 1차원 이완 모델

정상상태 닫힌 형태는 만들지 않고 광선 위 1차원 근 분리로 구한다.
"""

from fractions import Fraction

from steadycert.exactalg.ratfunc import RationalFunction
from steadycert.models.base_model import ModelDef, ParameterSet


class GoodwinModel(ModelDef):
    """
    x' = k1/(k2 + z^n) − k3·x,  y' = k4·x − k5·y,  z' = k6·y − k7·z
    """

    model_id = "goodwin"
    description = "Goodwin oscillator"
    states = ("x", "y", "z")
    parameters = ("k1", "k2", "k3", "k4", "k5", "k6", "k7")

    def __init__(self, n: int = 1):
        if n < 1:
            raise ValueError(f"Hill 지수는 1 이상이어야 합니다: {n}")
        self.n = n
        super().__init__()

    def _build_rhs(self) -> list[RationalFunction]:
        n = self.n
        return [
            self._rf(f"k1 - k3*x*(k2 + z^{n})", f"k2 + z^{n}"),
            self._rf("k4*x - k5*y"),
            self._rf("k6*y - k7*z"),
        ]

    def steady_state_ray(self, params: ParameterSet):
        k = self.validate(params)
        c = k["k4"] * k["k6"] / (k["k5"] * k["k7"])
        # k3·c^n·t^(n+1) + k3·k2·t − k1
        dense = [Fraction(0)] * (self.n + 2)
        dense[0] = -k["k1"]
        dense[1] = k["k3"] * k["k2"]
        dense[self.n + 1] += k["k3"] * c ** self.n
        return dense, [Fraction(1), k["k4"] / k["k5"], c]

    def describe(self) -> dict:
        data = super().describe()
        data["n"] = self.n
        return data


class ElowitzLeiblerModel(ModelDef):
    """
    X_i' = s + b/(1 + Y_{i−1}^n) − X_i,  Y_i' = −beta·(Y_i − X_i)  (Y_0 = Y_3)
    """

    model_id = "elowitz"
    description = "Elowitz-Leibler repressilator"
    states = ("X1", "X2", "X3", "Y1", "Y2", "Y3")
    parameters = ("s", "b", "beta")
    nonnegative = ("s",)

    def __init__(self, n: int = 1):
        if n < 1:
            raise ValueError(f"Hill 지수는 1 이상이어야 합니다: {n}")
        self.n = n
        super().__init__()

    def _build_rhs(self) -> list[RationalFunction]:
        n = self.n
        mrna = [
            self._rf(f"(s - X{i})*(1 + Y{(i - 2) % 3 + 1}^{n}) + b", f"1 + Y{(i - 2) % 3 + 1}^{n}")
            for i in (1, 2, 3)
        ]
        protein = [self._rf(f"beta*X{i} - beta*Y{i}") for i in (1, 2, 3)]
        return mrna + protein

    def steady_state_ray(self, params: ParameterSet):
        values = self.validate(params)
        s, b = values["s"], values["b"]
        # t^(n+1) − s·t^n + t − (s + b)
        dense = [Fraction(0)] * (self.n + 2)
        dense[0] -= s + b
        dense[1] += 1
        dense[self.n] -= s
        dense[self.n + 1] += 1
        return dense, [Fraction(1)] * 6

    def describe(self) -> dict:
        data = super().describe()
        data["n"] = self.n
        return data


class RelaxationModel(ModelDef):
    """x' = s − g·x"""

    model_id = "relax1d"
    description = "1D linear relaxation"
    states = ("x",)
    parameters = ("s", "g")
    nonnegative = ("s",)

    def _build_rhs(self) -> list[RationalFunction]:
        return [self._rf("s - g*x")]

    def steady_state_ray(self, params: ParameterSet):
        values = self.validate(params)
        return [-values["s"], values["g"]], [Fraction(1)]
