"""
Routh-Hurwitz 판정, 고유값, Hopf 반증 테스트
"""

from fractions import Fraction

import numpy as np
import pytest

from steadycert.errors import ModelDomainError
from steadycert.models import ParameterSet, get_model
from steadycert.stability import (
    classify,
    eigen_closed_form,
    eigen_numeric,
    hopf_falsify,
    hopf_formula_build,
    hurwitz_determinants,
    hurwitz_matrix,
    relative_discrepancy,
    routh_hurwitz_stable,
)
from steadycert.stability.classify import quadratic_discriminant_identity
from steadycert.utils.grid import parse_grid, sample_log_uniform


class TestHurwitz:
    """Hurwitz 행렬식"""

    def test_cubic_all_negative_roots(self):
        # (λ + 1)³
        coeffs = [1, 3, 3, 1]
        assert hurwitz_determinants(coeffs) == [3, 8, 8]
        assert routh_hurwitz_stable(coeffs)

    def test_cubic_unstable(self):
        # λ³ + λ² + λ + 2: Δ2 = 1·1 − 2 < 0
        assert hurwitz_determinants([1, 1, 1, 2])[1] == -1
        assert not routh_hurwitz_stable([1, 1, 1, 2])

    def test_non_monic_is_normalized(self):
        assert hurwitz_determinants([2, 6, 6, 2]) == hurwitz_determinants([1, 3, 3, 1])

    def test_matrix_layout(self):
        a0, a1, a2, a3 = (Fraction(k) for k in (1, 2, 3, 4))
        assert hurwitz_matrix([a0, a1, a2, a3]) == [[a1, a3, 0], [a0, a2, 0], [0, a1, a3]]

    def test_marginal_quadratic(self):
        # λ² + 1: 순허수 근
        assert hurwitz_determinants([1, 0, 1]) == [0, 0]
        assert not routh_hurwitz_stable([1, 0, 1])

    @pytest.mark.parametrize("coeffs", [[1], [0, 1, 2]])
    def test_rejects_degenerate(self, coeffs):
        with pytest.raises(ValueError):
            hurwitz_determinants(coeffs)


class TestEigen:
    """수치/닫힌 형태 고유값"""

    def test_numeric_sorted(self):
        values = eigen_numeric([[0.0, -1.0], [1.0, 0.0]])
        assert values == pytest.approx(np.array([-1j, 1j]))

    def test_non_square(self):
        with pytest.raises(ValueError):
            eigen_numeric([[1.0, 2.0]])

    def test_rep3d_closed_form(self, rep3d_params):
        values = eigen_closed_form(get_model("rep3d"), rep3d_params)
        assert values[0] == pytest.approx(-0.938, abs=1e-3)
        assert values[1] == pytest.approx(complex(-0.431, -0.293), abs=1e-3)
        assert values[2] == pytest.approx(complex(-0.431, 0.293), abs=1e-3)

    def test_bwd6d_closed_form(self, six_dim_params):
        values = eigen_closed_form(get_model("bwd6d"), six_dim_params)
        reals = sorted(v.real for v in values)
        assert reals[0] == pytest.approx(-0.2014, abs=1e-4)
        assert max(abs(v.imag) for v in values) == pytest.approx(0.1439, abs=1e-4)
        assert sum(1 for v in values if abs(v + 0.2) < 1e-12) == 3

    def test_no_closed_form(self):
        with pytest.raises(ModelDomainError):
            eigen_closed_form(get_model("relax1d"), ParameterSet.parse("s=1,g=1"))

    def test_relative_discrepancy(self):
        assert relative_discrepancy([1, 2j], [2j, 1]) == 0.0
        assert relative_discrepancy([2.0], [2.2]) == pytest.approx(0.1)
        with pytest.raises(ValueError):
            relative_discrepancy([1], [1, 2])


class TestClassify:
    """양의 정상상태 판정"""

    def test_rep3d_stable(self, rep3d_params):
        report = classify(get_model("rep3d"), rep3d_params)
        assert report.verdict == "asymptotically-stable"
        assert report.stable and report.consistent
        assert report.closed_form_discrepancy < 1e-9
        assert all(s > 0 for s in report.coefficient_signs)
        assert report.hurwitz_signs == [1, 1]
        assert report.max_real == pytest.approx(-0.431, abs=1e-3)

    def test_rep3d_other_state(self, rep3d_params):
        report = classify(get_model("rep3d"), rep3d_params)
        assert len(report.other_states) == 1
        other = report.other_states[0]
        assert other["label"] == "A"
        assert other["discrepancy"] < 1e-9

    def test_rep3d_damping_claim_holds(self, rep3d_params):
        claim = classify(get_model("rep3d"), rep3d_params).claims["abs_real_not_below_abs_imag"]
        assert claim["holds"]
        assert claim["ratio"] == pytest.approx(0.431 / 0.293, rel=1e-2)

    def test_rep3d_damping_claim_fails_for_strong_repression(self):
        params = ParameterSet.parse("s=0.1,b=100,g=0.1")
        report = classify(get_model("rep3d"), params)
        claim = report.claims["abs_real_not_below_abs_imag"]
        assert report.stable
        assert not claim["holds"]
        assert claim["status"] == "not-reproduced"
        assert report.damping[0]["abs_real"] == pytest.approx(0.0531, abs=1e-4)
        assert report.damping[0]["abs_imag"] == pytest.approx(0.0813, abs=1e-4)
        assert claim["ratio"] == pytest.approx(0.0531 / 0.0813, abs=1e-2)

    def test_fwd6d_consistent(self, six_dim_params):
        report = classify(get_model("fwd6d"), six_dim_params)
        assert report.consistent
        assert report.closed_form_discrepancy < 1e-8

    def test_bwd6d_checks(self, six_dim_params):
        report = classify(get_model("bwd6d"), six_dim_params)
        assert report.stable and report.consistent
        assert report.checks == {
            "factorization_matches": True,
            "linear_factor_positive": True,
            "quadratic_discriminant_negative": True,
        }

    def test_discriminant_identity(self):
        assert quadratic_discriminant_identity().is_zero()

    def test_report_serializes(self, rep3d_params):
        data = classify(get_model("rep3d"), rep3d_params).to_dict()
        assert data["verdict"] == "asymptotically-stable"
        assert len(data["eigenvalues"]) == 3
        assert "closed_form" in data

    @pytest.mark.parametrize("model_id", ["rep3d", "fwd6d", "bwd6d"])
    def test_random_points_are_stable(self, model_id):
        model = get_model(model_id)
        for params in sample_log_uniform(model.parameters, 5, 1e-2, 1e2, seed=7):
            report = classify(model, params)
            assert report.consistent
            assert report.stable


@pytest.mark.acceptance
class TestFullScale:
    """전체 규모 표본"""

    @pytest.mark.parametrize("model_id", ["rep3d", "fwd6d", "bwd6d"])
    def test_closed_form_matches_numeric(self, model_id):
        model = get_model(model_id)
        for params in sample_log_uniform(model.parameters, 100, 1e-2, 1e2, seed=11):
            report = classify(model, params)
            assert report.closed_form_discrepancy < 1e-9
            assert report.max_real < 0
            assert report.stable

    def test_bwd6d_factor_checks(self):
        model = get_model("bwd6d")
        for params in sample_log_uniform(model.parameters, 20, 1e-3, 1e3, seed=13):
            report = classify(model, params)
            assert all(report.checks.values()), params
            f = Fraction(model.positive_steady_state(params).coordinates()[0]).limit_denominator(10**6)
            assert quadratic_discriminant_identity().subs({"b": params.b, "g": params.g, "f": f}).is_zero()

    def test_rep3d_log_grid_has_no_witness(self):
        grid = parse_grid("s:0.01:100:10,b:0.01:100:10,g:0.01:100:10", log=True)
        report = hopf_falsify(get_model("rep3d"), grid=grid)
        assert report.points_evaluated == 1000
        assert not report.witness_found
        assert report.failures == []


class TestHopf:
    """Hopf 후보 공식과 반증"""

    def test_formula_rep3d(self):
        formula = hopf_formula_build(get_model("rep3d"))
        assert formula.symbolic and formula.hopf_possible
        assert len(formula.equations) == 3
        assert len(formula.delta_positive) == 1
        relations = [rel for rel, _ in formula.conditions()]
        assert relations.count("= 0") == 4

    def test_formula_six_dim_is_pointwise(self):
        formula = hopf_formula_build(get_model("fwd6d"))
        assert not formula.symbolic
        assert formula.an is None

    def test_one_dimensional_has_no_hopf(self):
        assert not hopf_formula_build(get_model("relax1d")).hopf_possible

    def test_rep3d_grid_has_no_witness(self):
        grid = parse_grid("s:0.01:100:3,b:0.01:100:3,g:0.01:100:3", log=True)
        report = hopf_falsify(get_model("rep3d"), grid=grid, jobs=1)
        assert report.points_evaluated == 27
        assert not report.witness_found
        assert report.failures == []
        assert report.to_dict()["conclusion"] == "no witness found"

    def test_samples(self):
        model = get_model("bwd6d")
        samples = sample_log_uniform(model.parameters, 4, 1e-2, 1e2, seed=3)
        report = hopf_falsify(model, samples=samples, seed=3, jobs=1)
        assert report.points_evaluated == 4
        assert not report.witness_found
        assert report.candidates == []

    def test_sign_change_between_grid_points(self):
        # s = 0, beta = 1, n = 2 에서 b = 3√2 를 지나면 안정성이 바뀐다
        grid = parse_grid("b:1:10:2", fixed={"s": 0, "beta": 1, "n": 2})
        report = hopf_falsify(get_model("elowitz", 2), grid=grid, jobs=1)
        assert report.points_evaluated == 2
        assert not report.witness_found
        assert len(report.candidates) == 1

    def test_requires_exactly_one_source(self):
        with pytest.raises(ValueError):
            hopf_falsify(get_model("rep3d"), jobs=1)
