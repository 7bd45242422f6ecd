"""
모델 정의, 파라미터, 정상상태 테스트
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from steadycert.errors import CertificationError, ContextError, ModelDomainError
from steadycert.exactalg import parse_polynomial
from steadycert.models import MODEL_IDS, ParameterSet, get_model, list_models, resolve_model


class TestParameterSet:
    """파라미터 파싱"""

    def test_parse_is_exact(self):
        params = ParameterSet.parse("s=0.3, b=4, g=3/5")
        assert params.s == Fraction(3, 10)
        assert params.b == 4
        assert params.g == Fraction(3, 5)
        assert str(params) == "s=3/10,b=4,g=3/5"

    @pytest.mark.parametrize("text", ["", "s", "s=0.3,s=1", "s=abc"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            ParameterSet.parse(text)

    def test_from_json_accepts_wrapper(self):
        params = ParameterSet.from_json({"model": "rep3d", "params": {"s": "3/10", "b": 4, "g": 0.6}})
        assert params == ParameterSet.parse("s=0.3,b=4,g=0.6")
        assert hash(params) == hash(ParameterSet.parse("g=0.6,b=4,s=0.3"))

    def test_with_values(self):
        params = ParameterSet.parse("s=1,b=10,g=0.2").with_values(b="5")
        assert params.b == 5
        assert params.floats() == {"s": 1.0, "b": 5.0, "g": 0.2}

    @pytest.mark.parametrize("n", ["0", "1.5"])
    def test_hill_exponent_must_be_positive_integer(self, n):
        with pytest.raises(ModelDomainError):
            ParameterSet.parse(f"k1=1,n={n}").hill()


class TestValidation:
    """파라미터 영역 검사"""

    @pytest.mark.parametrize(
        "text",
        ["s=0,b=4,g=0.6", "s=0.3,b=-4,g=0.6", "s=0.3,b=4", "s=0.3,b=4,g=0.6,k=1"],
    )
    def test_rep3d_rejects(self, text):
        with pytest.raises(ModelDomainError):
            get_model("rep3d").validate(ParameterSet.parse(text))

    def test_zero_allowed_where_declared(self):
        model = get_model("elowitz")
        values = model.validate(ParameterSet.parse("s=0,b=20,beta=1"))
        assert values["s"] == 0

    def test_state_length(self, rep3d_params):
        with pytest.raises(ContextError):
            get_model("rep3d").rhs_eval(rep3d_params, [1, 1])


class TestRightHandSide:
    """우변 평가"""

    def test_exact_evaluation(self, rep3d_params):
        # s + b/(1 + z) − g·x = 0.3 + 2 − 0.6
        values = get_model("rep3d").rhs_eval(rep3d_params, [1, 1, 1])
        assert values == [Fraction(17, 10)] * 3

    def test_float_matches_exact(self, six_dim_params):
        model = get_model("fwd6d")
        state = [Fraction(k, 3) for k in range(1, 7)]
        exact = model.rhs_eval(six_dim_params, state)
        approx = model.rhs_eval(six_dim_params, [float(v) for v in state], exact=False)
        assert approx == pytest.approx([float(v) for v in exact])

    def test_vector_field_matches_rhs(self, six_dim_params):
        model = get_model("bwd6d")
        state = np.array([0.5, 1.0, 1.5, 2.0, 2.5, 3.0])
        field = model.vector_field(six_dim_params)
        assert field(0.0, state) == pytest.approx(model.rhs_eval(six_dim_params, state, exact=False))

    def test_zero_denominator(self, rep3d_params):
        with pytest.raises(ModelDomainError):
            get_model("rep3d").rhs_eval(rep3d_params, [1, 1, -1])

    def test_strict_rejects_negative_denominator(self, rep3d_params):
        model = get_model("rep3d")
        with pytest.raises(ModelDomainError):
            model.rhs_eval(rep3d_params, [1, 1, -2])
        assert model.rhs_eval(rep3d_params, [1, 1, -2], strict=False)[0] == Fraction(-43, 10)

    def test_denominators(self):
        ctx = get_model("rep3d").context
        assert set(get_model("rep3d").denominators()) == {
            parse_polynomial(f"1 + {w}", ctx) for w in ("x", "y", "z")
        }
        assert get_model("relax1d").denominators() == []


class TestStationarity:
    """정상상태 다항식"""

    def test_rep3d_numerators(self):
        model = get_model("rep3d")
        numerators = model.stationarity_numerators()
        assert numerators[0] == parse_polynomial("(s - g*x)*(1 + z) + b", model.context)

    def test_reduction_keeps_odd_states(self):
        model = get_model("fwd6d")
        assert model.reduced_states == ("x1", "x3", "x5")
        reduced = model.stationarity_numerators(reduced=True)
        assert len(reduced) == 3
        assert all(p.context == ("s", "b", "g", "x1", "x3", "x5") for p in reduced)

    def test_steady_state_is_exact_zero(self, rep3d_params):
        model = get_model("rep3d")
        point = model.positive_steady_state(rep3d_params).point
        for f in model.specialize(rep3d_params):
            assert point.vanishes(f.numerator)


class TestSteadyStates:
    """닫힌 형태와 근 분리로 구한 정상상태"""

    def test_rep3d_closed_forms(self, rep3d_params):
        a, b = get_model("rep3d").closed_form_steady_states(rep3d_params)
        assert (a.label, b.label) == ("A", "B")
        assert b.positive and not a.positive
        assert b.closed_form_value == pytest.approx(2.438711, abs=1e-6)
        assert b.coordinates() == pytest.approx([b.closed_form_value] * 3, rel=1e-12)
        assert a.coordinates() == pytest.approx([a.closed_form_value] * 3, rel=1e-12)

    def test_six_dim_value(self, six_dim_params):
        for model_id in ("fwd6d", "bwd6d"):
            steady = get_model(model_id).positive_steady_state(six_dim_params)
            assert steady.coordinates() == pytest.approx([29.58450] * 6, abs=1e-5)

    def test_six_dim_unit_parameters(self):
        f, h = get_model("fwd6d").closed_form_steady_states(ParameterSet.parse("s=1,b=1,g=1"))
        assert f.label == "F" and f.positive
        assert f.closed_form_value == pytest.approx((math.sqrt(12) + 2) / 4)
        assert h.closed_form_value == pytest.approx((2 - math.sqrt(12)) / 4)
        assert not h.positive

    def test_residual_is_small(self, six_dim_params):
        model = get_model("bwd6d")
        steady = model.positive_steady_state(six_dim_params)
        assert model.residual(six_dim_params, steady.coordinates()) < 1e-10

    def test_goodwin_ray(self):
        params = ParameterSet.parse("k1=1,k2=1,k3=1,k4=1,k5=1,k6=1,k7=1")
        steady = get_model("goodwin").positive_steady_state(params)
        golden = (math.sqrt(5) - 1) / 2
        assert steady.coordinates() == pytest.approx([golden] * 3)

    def test_goodwin_scales(self):
        params = ParameterSet.parse("k1=2,k2=1,k3=1,k4=2,k5=1,k6=3,k7=1,n=2")
        model = resolve_model("goodwin", params)
        assert model.n == 2
        steady = model.positive_steady_state(params)
        x, y, z = steady.coordinates()
        assert y == pytest.approx(2 * x)
        assert z == pytest.approx(3 * y)
        assert model.residual(params, [x, y, z]) < 1e-10

    def test_relaxation(self):
        params = ParameterSet.parse("s=2,g=4")
        steady = get_model("relax1d").positive_steady_state(params)
        assert steady.coordinates() == pytest.approx([0.5])

    def test_no_positive_state(self):
        with pytest.raises(CertificationError):
            get_model("relax1d").positive_steady_state(ParameterSet.parse("s=0,g=1"))

    def test_to_dict(self, rep3d_params):
        data = get_model("rep3d").closed_form_steady_states(rep3d_params)[1].to_dict()
        assert data["label"] == "B"
        assert data["formula"].startswith("(s - g + sqrt")
        assert "certificate" in data


class TestJacobian:
    """야코비안과 특성다항식"""

    def test_rep3d_structure(self, rep3d_params):
        jac = get_model("rep3d").jacobian(rep3d_params, [1, 1, 1])
        # −b/(1 + z)² = −1
        assert jac[0] == [Fraction(-3, 5), 0, -1]
        assert jac[1] == [-1, Fraction(-3, 5), 0]
        assert jac[2] == [0, -1, Fraction(-3, 5)]

    def test_exact_and_float_agree(self, six_dim_params):
        model = get_model("fwd6d")
        state = [1, 2, 3, 4, 5, 6]
        exact = np.array([[float(v) for v in row] for row in model.jacobian(six_dim_params, state)])
        assert model.jacobian(six_dim_params, state, exact=False) == pytest.approx(exact)

    def test_char_poly(self, rep3d_params):
        # (λ + 3/5)³ + 1
        poly = get_model("rep3d").char_poly(rep3d_params, [1, 1, 1])
        assert poly == parse_polynomial("(lam + 3/5)^3 + 1", ("lam",))
        floats = get_model("rep3d").char_poly_float(rep3d_params, [1.0, 1.0, 1.0])
        assert floats == pytest.approx([1.0, 1.8, 1.08, 1.216])

    def test_jacobian_along_point(self, rep3d_params):
        model = get_model("rep3d")
        point = model.positive_steady_state(rep3d_params).point
        along = model.jacobian_along(rep3d_params, point)
        t = point.root_approx()
        direct = model.jacobian(rep3d_params, [t, t, t], exact=False)
        assert along[0][2].evaluate_float([t]) == pytest.approx(direct[0][2])


class TestRegistry:
    """모델 레지스트리"""

    def test_ids(self):
        assert list_models() == list(MODEL_IDS)
        assert {"rep3d", "fwd6d", "bwd6d", "goodwin", "elowitz", "relax1d"} == set(MODEL_IDS)

    def test_cached(self):
        assert get_model("rep3d") is get_model("rep3d")
        assert get_model("goodwin", 2) is not get_model("goodwin", 3)

    def test_unknown(self):
        with pytest.raises(ValueError):
            get_model("lorenz")

    def test_describe(self):
        data = get_model("elowitz", 2).describe()
        assert data["n"] == 2
        assert data["states"] == ["X1", "X2", "X3", "Y1", "Y2", "Y3"]
