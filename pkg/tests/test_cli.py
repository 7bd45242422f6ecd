"""
CLI와 보고서 형식 테스트
"""

import importlib
import json
from fractions import Fraction

import numpy as np
import pytest

from steadycert import config
from steadycert import main as cli
from steadycert.groebner import Budget
from steadycert.main import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, build_parser, main
from steadycert.utils.report_writer import build_report, load_report, normalize, provenance, save_report

REP3D = ["--model", "rep3d", "--params", "s=0.3,b=4,g=0.6"]


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


class TestReportWriter:
    """보고서 정규화와 머리말"""

    def test_normalize(self):
        data = normalize({
            "fraction": Fraction(3, 10),
            "float": 1 / 3,
            "complex": complex(1, -2),
            "array": np.array([1.5, 2.5]),
            "flag": np.bool_(True),
            "nan": float("nan"),
        })
        assert data == {
            "fraction": "3/10",
            "float": 0.333333333333,
            "complex": [1.0, -2.0],
            "array": [1.5, 2.5],
            "flag": True,
            "nan": "nan",
        }

    def test_provenance_drops_output_path(self):
        head = provenance(seed=3, argv=["certify", "--out", "x.json", "--seed", "3", "--out=y.json"])
        assert head["input"] == ["certify", "--seed", "3"]
        assert head["schema"] == config.REPORT_SCHEMA
        assert head["tool"]["name"] == "steadycert"

    def test_save_and_load(self, tmp_path):
        path = save_report(build_report("test", {"x": 1}, seed=0), tmp_path / "sub" / "r.json")
        data = load_report(path)
        assert data["kind"] == "test"
        assert data["result"] == {"x": 1}

    def test_load_rejects_other_schema(self, tmp_path):
        path = tmp_path / "old.json"
        path.write_text(json.dumps({"schema": "other"}), encoding="utf-8")
        with pytest.raises(ValueError):
            load_report(path)
        with pytest.raises(FileNotFoundError):
            load_report(tmp_path / "missing.json")


class TestCommands:
    """하위 명령"""

    def test_no_command(self, capsys):
        assert main([]) == EXIT_USAGE

    def test_config(self, capsys):
        assert main(["config"]) == EXIT_OK
        assert '"valid": true' in capsys.readouterr().out

    def test_json_goes_through_emit(self):
        assert callable(cli.emit)
        assert not hasattr(cli, "print_json")

    def test_steady_states(self, capsys):
        code, out = run(capsys, ["steady-states", *REP3D])
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["kind"] == "steady-states"
        labels = [st["label"] for st in report["result"]["steady_states"]]
        assert labels == ["A", "B"]
        assert report["result"]["positive_count"] == 1

    def test_output_is_deterministic(self, capsys):
        _, first = run(capsys, ["steady-states", *REP3D])
        _, second = run(capsys, ["steady-states", *REP3D])
        assert first == second

    def test_params_file(self, capsys, tmp_path):
        path = tmp_path / "params.json"
        path.write_text(json.dumps({"model": "rep3d", "params": {"s": "3/10", "b": 4, "g": 0.6}}))
        _, from_file = run(capsys, ["steady-states", "--model", "rep3d", "--params-file", str(path)])
        _, inline = run(capsys, ["steady-states", *REP3D])
        assert json.loads(from_file)["result"] == json.loads(inline)["result"]

    def test_domain_error(self, capsys):
        code = main(["steady-states", "--model", "rep3d", "--params", "s=0,b=4,g=0.6"])
        assert code == EXIT_USAGE

    def test_missing_params(self, capsys):
        assert main(["stability", "--model", "rep3d"]) == EXIT_USAGE

    def test_usage_error_exits_one(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["simulate", *REP3D])
        assert info.value.code == EXIT_USAGE

    def test_stability(self, capsys, tmp_path):
        out = tmp_path / "stability.json"
        code = main(["stability", "--model", "bwd6d", "--params", "s=1,b=10,g=0.2", "--out", str(out)])
        assert code == EXIT_OK
        report = load_report(out)
        assert report["result"]["verdict"] == "asymptotically-stable"
        assert "--out" not in report["input"]

    def test_hopf_scan(self, capsys):
        code, out = run(capsys, [
            "hopf-scan", "--model", "rep3d", "--grid", "s:0.1:1:2,b:1:10:2,g:0.1:1:2", "--jobs", "1",
        ])
        assert code == EXIT_OK
        assert json.loads(out)["result"]["conclusion"] == "no witness found"

    def test_certify_samples(self, capsys):
        code, out = run(capsys, [
            "certify", "--model", "bwd6d", "--samples", "2", "--range", "1e-2:1e2",
            "--seed", "5", "--jobs", "1",
        ])
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["seed"] == 5
        assert report["result"]["passed"] is True

    def test_certify_allwright(self, capsys):
        code, out = run(capsys, ["certify", *REP3D, "--allwright"])
        assert code == EXIT_OK
        assert json.loads(out)["result"]["rebuilt_certified"] is True

    def test_simulate_json(self, capsys):
        code, out = run(capsys, [
            "simulate", "--model", "fwd6d", "--params", "s=1,b=10,g=0.2",
            "--init", "1,2,3,8.5,5,6", "--t-end", "5",
        ])
        assert code == EXIT_OK
        result = json.loads(out)["result"]
        assert result["trajectory"]["t_end"] == 5.0
        assert result["pairwise_decay"]["holds"] is True
        assert result["oscillation"]["linearization_oscillatory"] is True

    def test_simulate_csv(self, capsys, tmp_path):
        out = tmp_path / "traj.csv"
        code = main(["simulate", *REP3D, "--init", "1,2,2", "--t-end", "5", "--out", str(out)])
        assert code == EXIT_OK
        assert out.read_text().splitlines()[0] == "t,x,y,z"

    def test_simulate_wrong_length(self, capsys):
        assert main(["simulate", *REP3D, "--init", "1,2"]) == EXIT_USAGE

    def test_sweep_csv(self, capsys):
        code, out = run(capsys, [
            "sweep", "--model", "rep3d", "--grid", "b:1:4:2", "--fixed", "s=0.3,g=0.6",
            "--no-simulate", "--format", "csv", "--jobs", "1",
        ])
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0].startswith("index,")
        assert len(lines) == 3

    def test_groebner(self, capsys, tmp_path):
        path = tmp_path / "ideal.json"
        path.write_text(json.dumps({"vars": ["x", "y"], "generators": ["x*y - 1", "x"]}))
        code, out = run(capsys, ["groebner", "--input", str(path), "--order", "lex", "--reduce"])
        assert code == EXIT_OK
        result = json.loads(out)["result"]
        assert result["unit"] is True
        assert result["text"] == ["1"]

    def test_groebner_missing_input(self, capsys, tmp_path):
        assert main(["groebner", "--input", str(tmp_path / "none.json")]) == EXIT_USAGE

    def test_certify_budget_violation_exits_two(self, capsys):
        code = main([
            "certify", "--model", "rep3d", "--samples", "1", "--range", "1e-2:1e2",
            "--seed", "0", "--jobs", "1", "--max-pairs", "1",
        ])
        assert code == EXIT_VIOLATION


@pytest.fixture
def budget_env(monkeypatch):
    """STEADYCERT_BUDGET_SECS=7.5 로 설정 모듈을 다시 읽는다"""
    monkeypatch.setenv("STEADYCERT_BUDGET_SECS", "7.5")
    importlib.reload(config)
    yield
    monkeypatch.delenv("STEADYCERT_BUDGET_SECS")
    importlib.reload(config)


class TestBudgetEnvironment:
    """환경변수 예산 상한"""

    def test_default_budget_follows_env(self, budget_env):
        assert config.BUDGET_SECS == 7.5
        assert Budget().max_seconds == 7.5
        assert config.validate_config()["config"]["budget_secs"] == 7.5

    def test_cli_default_follows_env(self, budget_env):
        args = build_parser().parse_args(["certify", "--model", "rep3d"])
        assert args.budget_secs == 7.5
