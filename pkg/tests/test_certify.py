"""
정상상태 인증, 분해 검증, 순환 사상 검사 테스트
"""

from fractions import Fraction

import pytest

from steadycert.certify import (
    allwright_check,
    certify,
    certify_samples,
    solve_zero_dimensional,
    verify_decompositions,
)
from steadycert.certify.decomposition import containment_check, quotient_component_check
from steadycert.certify.pipelines import j1_points, j2_points
from steadycert.errors import CertificationError, ModelDomainError
from steadycert.exactalg import parse_polynomial
from steadycert.groebner import Budget, Ideal
from steadycert.models import ParameterSet, get_model
from steadycert.utils.data_loader import load_ideal
from steadycert.utils.grid import sample_log_uniform

XY = ("x", "y")


def polys(exprs, ctx=XY):
    return [parse_polynomial(e, ctx) for e in exprs]


class TestSolver:
    """0차원 실근 열거"""

    def test_shape_position(self):
        solution = solve_zero_dimensional(polys(["x^2 - 2", "y - x"]))
        assert solution.separating_form is None
        assert len(solution.points) == 2
        (positive,) = solution.positive_points()
        assert positive.approx() == pytest.approx([2 ** 0.5] * 2)

    def test_separating_form(self):
        # (±1, ±1): x + y 는 두 점을 구분하지 못한다
        solution = solve_zero_dimensional(polys(["x^2 - 1", "y^2 - 1"]))
        assert solution.separating_form == (1, 2)
        assert len(solution.points) == 4
        (positive,) = solution.positive_points()
        assert positive.approx() == pytest.approx([1.0, 1.0])

    def test_inconsistent(self):
        solution = solve_zero_dimensional(polys(["x*y - 1", "x"]))
        assert solution.unit
        assert solution.points == []

    def test_positive_dimensional(self):
        with pytest.raises(CertificationError):
            solve_zero_dimensional(polys(["x*y"]))

    def test_empty(self):
        with pytest.raises(ValueError):
            solve_zero_dimensional([])


class TestCertify:
    """모델별 단일 점 인증"""

    def test_rep3d(self, rep3d_params):
        report = certify("rep3d", rep3d_params)
        assert report.passed
        record = report.records[0]
        assert record["checks"] == {"positive_count": 1, "matches_closed_form": True}
        coords = record["positive_states"][0]["coordinates"]
        assert list(coords.values()) == pytest.approx([2.438711] * 3, abs=1e-6)

    def test_fwd6d(self, six_dim_params):
        report = certify("fwd6d", six_dim_params)
        assert report.passed
        assert report.flags["no_positive_on_j1"] is None
        checks = report.records[0]["checks"]
        assert checks["symmetric"] and checks["full_system_vanishes"]

    def test_bwd6d(self, six_dim_params):
        report = certify("bwd6d", six_dim_params)
        assert report.flags == {
            "unique_positive": True,
            "symmetric": True,
            "no_positive_on_j1": True,
        }
        assert report.passed

    def test_unsupported_model(self):
        with pytest.raises(ValueError):
            certify("goodwin", ParameterSet.parse("k1=1"))

    def test_invalid_parameters(self):
        with pytest.raises(ModelDomainError):
            certify("rep3d", ParameterSet.parse("s=0,b=1,g=1"))

    def test_report_dict(self, rep3d_params):
        data = certify("rep3d", rep3d_params).to_dict()
        assert data["passed"] is True
        assert data["samples"] == 1
        assert data["failures"] == 0


class TestJ1Branch:
    """bwd6d J1 성분"""

    def test_no_positive_points(self, six_dim_params):
        points, lead = j1_points(six_dim_params)
        assert not any(p.is_positive() for p in points)
        assert float(lead) == pytest.approx(0.0976, abs=1e-4)

    def test_j2_has_one_positive(self, six_dim_params):
        points = j2_points(six_dim_params)
        assert [p.is_positive() for p in points] == [False, True]
        assert points[1].approx() == pytest.approx([29.5845] * 3, abs=1e-4)

    @pytest.mark.acceptance
    def test_no_positive_points_full_scale(self):
        model = get_model("bwd6d")
        for params in sample_log_uniform(model.parameters, 1000, 1e-3, 1e3, seed=0):
            points, _ = j1_points(params)
            assert not any(p.is_positive() for p in points), params

    @pytest.mark.acceptance
    def test_direct_solve_agrees(self):
        report = certify_samples("bwd6d", 50, 1e-3, 1e3, seed=1)
        assert report.failures == []
        for record in report.records:
            assert record["checks"]["direct_solve_matches"]
            assert record["checks"]["real_solution_count_matches"]


class TestSamples:
    """표본 인증"""

    def test_deterministic(self):
        first = certify_samples("rep3d", 3, 1e-2, 1e2, seed=11, jobs=1)
        second = certify_samples("rep3d", 3, 1e-2, 1e2, seed=11, jobs=1)
        assert first.to_dict() == second.to_dict()
        assert first.passed
        assert [r["index"] for r in first.records] == [0, 1, 2]

    def test_bwd6d_samples(self):
        report = certify_samples("bwd6d", 2, 1e-2, 1e2, seed=5, jobs=1)
        assert report.passed
        assert report.sampling == {"count": 2, "range": [1e-2, 1e2], "seed": 5}

    def test_budget_failure_is_recorded(self):
        report = certify_samples("rep3d", 1, 1e-2, 1e2, seed=0, jobs=1, budget=Budget(max_pairs=1))
        assert not report.passed
        assert report.failures[0]["error_message"].startswith("ResourceBudgetError")
        assert report.flags["unique_positive"] is False

    @pytest.mark.parametrize("count", [0, -1])
    def test_rejects_count(self, count):
        with pytest.raises(ValueError):
            certify_samples("rep3d", count, 1e-2, 1e2, seed=0)

    @pytest.mark.acceptance
    @pytest.mark.parametrize("model_id", ["rep3d", "fwd6d", "bwd6d"])
    def test_full_scale(self, model_id):
        assert certify_samples(model_id, 1000, 1e-3, 1e3, seed=0).passed


class TestAllwright:
    """순환 사상 검사"""

    def test_tabulated_map_is_flagged(self, rep3d_params):
        report = allwright_check(rep3d_params)
        assert report.tabulated["increasing"]
        assert not report.tabulated["decreasing"]
        assert report.tabulated["matches_flipped_composition"]
        claim = report.claims["tabulated_phi_decreasing_with_fixed_points_u1_u2"]
        assert claim["status"] == "not-reproduced"
        assert claim["holds_for_rebuilt_map"]

    def test_rebuilt_map_is_certified(self, rep3d_params):
        report = allwright_check(rep3d_params)
        assert report.rebuilt_certified
        assert report.rebuilt["decreasing"]
        assert report.rebuilt["fixed_point_quadratic_proportional_to_ray"]
        assert report.rebuilt["u1"] == pytest.approx(2.438711, abs=1e-6)

    @pytest.mark.acceptance
    def test_rebuilt_map_full_scale(self):
        model = get_model("rep3d")
        for params in sample_log_uniform(model.parameters, 100, 1e-3, 1e3, seed=2):
            rebuilt = allwright_check(params).rebuilt
            assert rebuilt["decreasing"] and rebuilt["u1_equals_b"], params
            assert rebuilt["u2"] < 0
            assert rebuilt["u1"] == pytest.approx(rebuilt["b_closed_form"], rel=1e-9)

    def test_evaluations_are_exact(self, rep3d_params):
        report = allwright_check(rep3d_params)
        assert [e["u"] for e in report.evaluations][:3] == ["0", "1/2", "1"]
        for entry in report.evaluations:
            if "phi" in entry:
                assert float(Fraction(entry["phi"])) == pytest.approx(entry["phi_float"])

    def test_rejects_nonpositive(self):
        with pytest.raises(ModelDomainError):
            allwright_check(ParameterSet.parse("s=0.3,b=0,g=0.6"))


SPECIAL = [ParameterSet.parse("s=1,b=2,g=3")]


class TestDecomposition:
    """분해 검증"""

    @pytest.mark.parametrize("key", ["I1", "I2", "I3"])
    def test_i_contained_in_components(self, key):
        check = containment_check(
            f"I ⊆ {key}",
            load_ideal("minimal_primes_I"),
            load_ideal("minimal_primes_I", key),
            SPECIAL,
            symbolic=False,
        )
        assert check["passed"]
        assert check["path"] == "specialized"

    def test_quotient_components_empty(self):
        check = quotient_component_check(SPECIAL)
        assert check["passed"]
        assert check["components"] == 5

    def test_unknown_decomposition(self):
        with pytest.raises(ValueError):
            verify_decompositions("K", seed=0)

    def test_symbolic_path_ignores_time_cap(self):
        small = Ideal.from_strings(["x^2*y - y"], XY)
        big = Ideal.from_strings(["x^2 - 1", "x*y - y"], XY)
        check = containment_check("xy", small, big, [], Budget(max_pairs=10000, max_seconds=0.0))
        assert check["path"] == "symbolic"
        assert check["passed"]

    def test_pair_cap_selects_specialized_path(self):
        small = Ideal.from_strings(["x^2*y - y"], XY)
        big = Ideal.from_strings(["x^2 - 1", "x*y - y"], XY)
        check = containment_check("xy", small, big, [], Budget(max_pairs=0))
        assert check["path"] == "specialized"

    @pytest.mark.slow
    def test_i_full(self):
        report = verify_decompositions("I", seed=0)
        assert report.sampling["count"] == 20
        containment = [c for c in report.checks if c["name"].startswith("I ⊆")]
        assert len(containment) == 3
        assert all(c["passed"] for c in containment)
