"""
적분기, 감쇠 지표, 격자 스윕 테스트
"""

import math

import numpy as np
import pytest

from steadycert.errors import IntegrationError, ModelDomainError
from steadycert.models import ParameterSet, get_model
from steadycert.simulate import (
    InitialStatePolicy,
    damping_metrics,
    integrate,
    integrate_field,
    oscillation_claim,
    pairwise_decay_check,
    sweep,
)
from steadycert.simulate.metrics import count_crossings
from steadycert.utils.grid import parse_grid


def decay(t, x):
    return -x


class TestIntegrator:
    """Dormand-Prince 적응 적분"""

    def test_linear_decay(self):
        tr = integrate_field(decay, [1.0], 1.0)
        assert tr.t_end == 1.0
        assert tr.final_state[0] == pytest.approx(math.exp(-1), rel=1e-7)

    def test_times_strictly_increase(self):
        tr = integrate_field(decay, [1.0, 2.0], 3.0)
        assert np.all(np.diff(tr.times) > 0)
        assert tr.stats.steps == len(tr.times) - 1

    def test_oscillator_preserves_energy(self):
        def rotation(t, x):
            return np.array([x[1], -x[0]])

        tr = integrate_field(rotation, [1.0, 0.0], 2 * math.pi, positive=False)
        assert tr.final_state == pytest.approx([1.0, 0.0], abs=1e-6)

    def test_interpolation(self):
        tr = integrate_field(decay, [1.0], 2.0)
        assert tr.interpolate(0.5)[0] == pytest.approx(math.exp(-0.5), rel=1e-5)
        assert tr.interpolate([0.0, 2.0])[:, 0] == pytest.approx([1.0, math.exp(-2)], rel=1e-7)

    def test_interpolation_out_of_range(self):
        tr = integrate_field(decay, [1.0], 1.0)
        with pytest.raises(ValueError):
            tr.interpolate(1.5)

    @pytest.mark.parametrize("kwargs", [{"rel_tol": 0.0}, {"abs_tol": -1.0}])
    def test_invalid_tolerance(self, kwargs):
        with pytest.raises(ValueError):
            integrate_field(decay, [1.0], 1.0, **kwargs)

    def test_invalid_horizon(self):
        with pytest.raises(ValueError):
            integrate_field(decay, [1.0], 0.0)

    def test_nonpositive_initial_state(self):
        with pytest.raises(ModelDomainError):
            integrate_field(decay, [0.0], 1.0)

    def test_leaving_positive_orthant(self):
        def drain(t, x):
            return np.array([-1.0])

        with pytest.raises(IntegrationError):
            integrate_field(drain, [0.5], 2.0)

    def test_model_state_length(self, rep3d_params):
        with pytest.raises(ModelDomainError):
            integrate(get_model("rep3d"), rep3d_params, [1.0, 2.0])

    def test_csv(self, tmp_path, rep3d_params):
        tr = integrate(get_model("rep3d"), rep3d_params, [1.0, 2.0, 2.0], t_end=5.0)
        path = tmp_path / "traj.csv"
        tr.to_csv(path)
        lines = path.read_text().splitlines()
        assert lines[0] == "t,x,y,z"
        assert len(lines) == len(tr.times) + 1


class TestDampingMetrics:
    """감쇠 지표"""

    def test_count_crossings_with_hysteresis(self):
        values = np.array([0.0, 2.0, 1.0, 1.05, 0.95, 0.0, 2.0])
        assert count_crossings(values, 1.0, 0.1) == 3

    def test_rep3d_damped_oscillation(self, rep3d_params):
        model = get_model("rep3d")
        target = model.positive_steady_state(rep3d_params).coordinates()
        tr = integrate(model, rep3d_params, [1.0, 2.0, 2.0])
        metrics = damping_metrics(tr, target, model, rep3d_params)
        assert metrics.reliable
        assert metrics.classification == "damped-oscillation"
        assert metrics.max_crossings >= 2
        claim = oscillation_claim(metrics, model, rep3d_params)
        assert claim["status"] == "reproduced"
        assert claim["linearization_oscillatory"]

    def test_relaxation_is_monotone(self):
        model = get_model("relax1d")
        params = ParameterSet.parse("s=1,g=1")
        tr = integrate(model, params, [3.0], t_end=30.0)
        metrics = damping_metrics(tr, [1.0], model, params)
        assert metrics.crossings == [0]
        assert metrics.classification == "non-oscillatory"
        assert metrics.overshoot is None

    def test_six_dim_converges(self, six_dim_params):
        model = get_model("bwd6d")
        tr = integrate(model, six_dim_params, [1.0] * 6, t_end=100.0)
        assert tr.final_state == pytest.approx([29.5845] * 6, rel=1e-5)
        target = model.positive_steady_state(six_dim_params).coordinates()
        assert damping_metrics(tr, target, model, six_dim_params).reliable

    def test_target_shape(self, rep3d_params):
        tr = integrate(get_model("rep3d"), rep3d_params, [1.0, 2.0, 2.0], t_end=1.0)
        with pytest.raises(ValueError):
            damping_metrics(tr, [1.0, 1.0])


class TestPairwiseDecay:
    """같은 비선형항을 공유하는 좌표 쌍"""

    @pytest.mark.parametrize("model_id", ["fwd6d", "bwd6d"])
    def test_difference_decays_exponentially(self, model_id, six_dim_params):
        model = get_model(model_id)
        tr = integrate(model, six_dim_params, [1.0, 2.0, 3.0, 8.5, 5.0, 6.0], t_end=5.0)
        report = pairwise_decay_check(tr, model, six_dim_params)
        assert report.holds
        assert [p["pair"] for p in report.pairs] == [["x1", "x2"], ["x3", "x4"], ["x5", "x6"]]
        gap = abs(tr.final_state[3] - tr.final_state[2])
        assert gap == pytest.approx(5.5 * math.exp(-1), rel=1e-6)

    def test_not_applicable_to_rep3d(self, rep3d_params):
        model = get_model("rep3d")
        tr = integrate(model, rep3d_params, [1.0, 2.0, 2.0], t_end=1.0)
        with pytest.raises(ModelDomainError):
            pairwise_decay_check(tr, model, rep3d_params)


class TestSixDimensionalRun:
    """s=1, b=10, g=0.2 에서 x0=(25, 23, 25, 30.5, 21, 30) 궤적"""

    X0 = [25.0, 23.0, 25.0, 30.5, 21.0, 30.0]

    def run(self, model_id, params, t_end):
        model = get_model(model_id)
        tr = integrate(model, params, self.X0, t_end=t_end)
        target = model.positive_steady_state(params).coordinates()
        metrics = damping_metrics(tr, target, model, params)
        return model, tr, metrics

    def test_limit_and_pair_gap(self, six_dim_params):
        model, tr, _ = self.run("bwd6d", six_dim_params, 100.0)
        assert tr.final_state == pytest.approx([29.58450] * 6, abs=1e-3)
        assert pairwise_decay_check(tr, model, six_dim_params).holds
        state = tr.interpolate(5.0)
        assert abs(state[3] - state[2]) == pytest.approx(5.5 * math.exp(-1), abs=1e-5)

    def test_backward_run_is_flagged_not_reproduced(self, six_dim_params):
        """교차 1회 이하: 선형화의 복소 쌍은 실수부가 지배"""
        model, _, metrics = self.run("bwd6d", six_dim_params, 100.0)
        assert metrics.reliable
        assert metrics.classification == "non-oscillatory"
        assert metrics.max_crossings <= 1

        claim = oscillation_claim(metrics, model, six_dim_params)
        assert claim["status"] == "not-reproduced"
        assert claim["crossings"] == metrics.crossings
        assert claim["linearization_oscillatory"]
        assert claim["real_parts_dominate"]
        assert claim["complex_pairs"][0]["ratio"] == pytest.approx(1.40, abs=0.02)

    def test_forward_run_oscillates(self, six_dim_params):
        model, _, metrics = self.run("fwd6d", six_dim_params, 200.0)
        assert metrics.classification == "damped-oscillation"
        assert oscillation_claim(metrics, model, six_dim_params)["status"] == "reproduced"


class TestSweep:
    """격자 스윕"""

    @pytest.mark.parametrize("text", ["fixed:", "fixed:1,-1", "perturb:x", "perturb:1.5", "random:1"])
    def test_policy_rejects(self, text):
        with pytest.raises(ValueError):
            InitialStatePolicy.parse(text)

    def test_perturb_is_seeded(self):
        policy = InitialStatePolicy.parse("perturb:0.1")
        target = np.array([1.0, 2.0, 3.0])
        first = policy.initial_state(target, seed=5, flat_index=2)
        assert np.array_equal(first, policy.initial_state(target, seed=5, flat_index=2))
        assert np.all(np.abs(first / target - 1) <= 0.1)

    def test_rep3d_sweep(self):
        grid = parse_grid("b:1:4:2", fixed={"s": "0.3", "g": "0.6"})
        result = sweep(get_model("rep3d"), grid, seed=1, jobs=1)
        assert result.failures == []
        assert result.verdict_counts() == {"asymptotically-stable": 2}
        frame = result.to_frame()
        assert list(frame["b"]) == [1.0, 4.0]
        assert set(frame.columns) >= {"index", "s", "g", "verdict", "max_real", "classification"}

    def test_stability_only(self):
        grid = parse_grid("s:0.1:1:2,g:0.1:1:2", fixed={"b": 10})
        result = sweep(get_model("bwd6d"), grid, simulate=False, jobs=1)
        assert len(result.records) == 4
        assert all(r["classification"] is None for r in result.records)
        assert result.to_dict()["verdicts"] == {"asymptotically-stable": 4}

    def test_point_errors_are_recorded(self):
        grid = parse_grid("b:1:4:2", fixed={"s": "0.3"})
        result = sweep(get_model("rep3d"), grid, simulate=False, jobs=1)
        assert len(result.failures) == 2
        assert result.failures[0]["error_message"].startswith("ModelDomainError")
        assert result.verdict_counts() == {"error": 2}

    def test_csv(self, tmp_path):
        grid = parse_grid("b:1:4:2", fixed={"s": "0.3", "g": "0.6"})
        path = tmp_path / "sweep.csv"
        sweep(get_model("rep3d"), grid, simulate=False, jobs=1).to_csv(path)
        header = path.read_text().splitlines()[0]
        assert header.startswith("index,")
        assert "verdict" in header
