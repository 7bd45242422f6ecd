"""
steadycert 메인 진입점

사용 예시:
    # 정상상태
    steadycert steady-states --model rep3d --params s=0.3,b=4,g=0.6

    # 안정성 / Hopf 반증
    steadycert stability --model bwd6d --params s=1,b=10,g=0.2 --out report.json
    steadycert hopf-scan --model rep3d --grid "s:1e-2:1e2:10,b:1e-2:1e2:10,g:1e-2:1e2:10" --log --seed 42

    # 인증
    steadycert certify --model bwd6d --samples 1000 --range 1e-3:1e3 --seed 42 --out cert.json
    steadycert verify-decomposition --which J --seed 7 --out dec.json

    # 시뮬레이션
    steadycert simulate --model rep3d --params s=0.3,b=4,g=0.6 --init 1,2,2 --t-end 40 --out traj.csv

종료 코드: 0 성공, 1 사용법/정의역 오류, 2 수학적 기대 위반
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from steadycert import config
from steadycert.certify import allwright_check, certify, certify_samples, verify_decompositions
from steadycert.certify.decomposition import DECOMPOSITIONS, MIN_SPECIALIZATIONS
from steadycert.errors import CertificationError, SteadyCertError
from steadycert.exactalg.monomial import parse_order
from steadycert.exactalg.polynomial import format_polynomial
from steadycert.groebner.buchberger import Budget, groebner_basis
from steadycert.groebner.ideals import Ideal
from steadycert.models.base_model import ParameterSet
from steadycert.models.registry import MODEL_IDS, REPRESSILATOR_MODELS, resolve_model
from steadycert.simulate import damping_metrics, integrate, oscillation_claim, pairwise_decay_check, sweep
from steadycert.simulate.sweep import DEFAULT_X0_POLICY
from steadycert.stability import classify, hopf_falsify
from steadycert.utils.grid import parse_grid, parse_range, sample_log_uniform
from steadycert.utils.report_writer import build_report, dumps, save_report

logger = logging.getLogger("steadycert")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2


class CliParser(argparse.ArgumentParser):
    """사용법 오류를 종료 코드 1로 (2는 수학적 기대 위반 전용)"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: 오류: {message}\n")


def status(message: str) -> None:
    """사람이 읽는 진행 메시지 (stderr, 기계 출력과 분리)"""
    print(message, file=sys.stderr)


# ===== 입력 =====

def load_params(args: argparse.Namespace) -> ParameterSet:
    """
    --params 또는 --params-file

    Raises:
        ValueError: 둘 다 없거나 형식 오류
    """
    if getattr(args, "params_file", None):
        path = Path(args.params_file)
        if not path.exists():
            raise FileNotFoundError(f"파라미터 파일을 찾을 수 없습니다: {path}")
        return ParameterSet.from_json(json.loads(path.read_text(encoding="utf-8")))
    if getattr(args, "params", None):
        return ParameterSet.parse(args.params)
    raise ValueError("--params 또는 --params-file이 필요합니다.")


def budget_from(args: argparse.Namespace) -> Budget:
    return Budget(max_pairs=args.max_pairs, max_seconds=args.budget_secs)


def parse_vector(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ValueError(f"벡터를 읽을 수 없습니다: {text!r}")


# ===== 출력 =====

def emit(kind: str, body: Any, args: argparse.Namespace, argv: Sequence[str]) -> dict:
    """보고서를 --out 또는 stdout으로"""
    budgets = budget_from(args).to_dict()
    report = build_report(kind, body, seed=args.seed, budgets=budgets, argv=argv)
    if args.out:
        path = save_report(report, args.out)
        status(f"💾 저장: {path}")
    else:
        sys.stdout.write(dumps(report))
    return report


def wants_csv(args: argparse.Namespace) -> bool:
    if args.format:
        return args.format == "csv"
    return bool(args.out) and str(args.out).endswith(".csv")


# ===== 명령 =====

def run_steady_states(args, argv) -> int:
    """정상상태 목록 (rep3d는 A와 B)"""
    params = load_params(args)
    model = resolve_model(args.model, params)
    status(f"📍 {model.model_id} 정상상태 계산... ({params})")
    states = model.closed_form_steady_states(params)
    body = {
        "model": model.model_id,
        "params": params.to_dict(),
        "steady_states": [st.to_dict() for st in states],
        "positive_count": sum(1 for st in states if st.positive),
    }
    emit("steady-states", body, args, argv)
    status(f"\n✅ 완료! 양의 정상상태 {body['positive_count']}개")
    return EXIT_OK


def run_stability(args, argv) -> int:
    """안정성 판정 (리프레실레이터 모델이 안정하지 않으면 종료 코드 2)"""
    params = load_params(args)
    model = resolve_model(args.model, params)
    status(f"📈 {model.model_id} 안정성 분석... ({params})")
    report = classify(model, params)
    emit("stability", report, args, argv)
    status(f"\n✅ 판정: {report.verdict} (max Re λ = {report.max_real:.6g})")
    if not report.consistent:
        status("⚠️  정확한 Hurwitz 판정과 수치 고유값이 일치하지 않습니다.")
        return EXIT_VIOLATION
    if model.model_id in REPRESSILATOR_MODELS and not report.stable:
        return EXIT_VIOLATION
    return EXIT_OK


def run_hopf_scan(args, argv) -> int:
    """Hopf 반증 (리프레실레이터 모델에서 witness가 나오면 종료 코드 2)"""
    fixed = ParameterSet.parse(args.fixed) if args.fixed else None
    model = resolve_model(args.model, fixed)
    if args.grid:
        grid = parse_grid(args.grid, log=args.log, fixed=fixed.values if fixed else None)
        status(f"🔍 {model.model_id} Hopf 반증 (격자 {grid.shape})...")
        report = hopf_falsify(model, grid=grid, seed=args.seed, jobs=args.jobs)
    else:
        lo, hi = parse_range(args.range)
        samples = sample_log_uniform(model.parameters, args.samples, lo, hi, args.seed,
                                     fixed=fixed.values if fixed else None)
        status(f"🔍 {model.model_id} Hopf 반증 (표본 {len(samples)}개)...")
        report = hopf_falsify(model, samples=samples, seed=args.seed, jobs=args.jobs)
    emit("hopf-scan", report, args, argv)
    status(f"\n✅ {report.points_evaluated}점 평가, witness {len(report.witnesses)}개, "
           f"실패 {len(report.failures)}개")
    if report.witness_found and model.model_id in REPRESSILATOR_MODELS:
        status("⚠️  Hopf witness 발견")
        return EXIT_VIOLATION
    return EXIT_OK


def run_certify(args, argv) -> int:
    """정상상태 인증 (결론 플래그 실패 시 종료 코드 2)"""
    budget = budget_from(args)
    if args.allwright:
        params = load_params(args)
        status(f"🔁 Allwright 사상 검사... ({params})")
        report = allwright_check(params)
        emit("allwright", report, args, argv)
        passed = report.rebuilt_certified
    elif args.params or args.params_file:
        params = load_params(args)
        status(f"🔐 {args.model} 인증... ({params})")
        report = certify(args.model, params, budget)
        emit("certify", report, args, argv)
        passed = report.passed
    else:
        lo, hi = parse_range(args.range)
        status(f"🔐 {args.model} 인증 (표본 {args.samples}개, 시드 {args.seed})...")
        report = certify_samples(args.model, args.samples, lo, hi, args.seed, args.jobs, budget)
        emit("certify", report, args, argv)
        passed = report.passed
    if passed:
        status("\n✅ 인증 통과!")
        return EXIT_OK
    status("\n❌ 인증 실패")
    return EXIT_VIOLATION


def run_verify_decomposition(args, argv) -> int:
    status(f"🧩 분해 {args.which} 검증 (특수화 {args.samples}개, 시드 {args.seed})...")
    report = verify_decompositions(args.which, args.seed, args.samples, budget_from(args))
    emit("verify-decomposition", report, args, argv)
    for check in report.checks:
        mark = "✅" if check["passed"] else "❌"
        status(f"   {mark} {check['name']} ({check['path']})")
    return EXIT_OK if report.passed else EXIT_VIOLATION


def run_simulate(args, argv) -> int:
    """궤적 적분 (CSV: 궤적 / JSON: 요약 + 감쇠 지표)"""
    params = load_params(args)
    model = resolve_model(args.model, params)
    x0 = parse_vector(args.init)
    status(f"🧪 {model.model_id} 시뮬레이션... ({params}, x0={x0})")
    tr = integrate(model, params, x0, args.t_end, args.rtol, args.atol)
    target = model.positive_steady_state(params).coordinates()
    metrics = damping_metrics(tr, target, model, params)
    status(f"   스텝 {tr.stats.steps}, 거절 {tr.stats.rejections}, 분류 {metrics.classification}")

    if wants_csv(args):
        if args.out:
            tr.to_csv(args.out)
            status(f"💾 저장: {args.out}")
        else:
            tr.to_csv(sys.stdout)
        return EXIT_OK

    body = {
        "trajectory": tr.to_dict(),
        "damping": metrics.to_dict(),
        "oscillation": oscillation_claim(metrics, model, params),
    }
    if model.reduction:
        body["pairwise_decay"] = pairwise_decay_check(tr, model, params).to_dict()
    emit("simulate", body, args, argv)
    status("\n✅ 시뮬레이션 완료!")
    return EXIT_OK


def run_sweep(args, argv) -> int:
    fixed = ParameterSet.parse(args.fixed) if args.fixed else None
    model = resolve_model(args.model, fixed)
    grid = parse_grid(args.grid, log=args.log, fixed=fixed.values if fixed else None)
    status(f"🗺️  {model.model_id} 스윕 (격자 {grid.shape}, 초기 상태 {args.x0})...")
    result = sweep(model, grid, args.x0, args.seed, args.t_end, not args.no_simulate, args.jobs)
    if wants_csv(args):
        if args.out:
            result.to_csv(args.out)
            status(f"💾 저장: {args.out}")
        else:
            result.to_frame().to_csv(sys.stdout, index=False, float_format="%.10g")
    else:
        emit("sweep", result, args, argv)
    status(f"\n✅ 스윕 완료! 판정 {result.verdict_counts()}, 실패 {len(result.failures)}개")
    return EXIT_OK


def run_groebner(args, argv) -> int:
    """이데알 JSON의 그뢰브너 기저"""
    path = Path(args.input)
    if not path.exists():
        raise FileNotFoundError(f"입력 파일을 찾을 수 없습니다: {path}")
    order = parse_order(args.order)
    ideal = Ideal.from_json(json.loads(path.read_text(encoding="utf-8")))
    status(f"🧮 그뢰브너 기저 ({args.order}, 생성원 {len(ideal)}개)...")
    gens = [g.with_order(order) for g in ideal.generators]
    gb = groebner_basis(gens, order, reduced=args.reduce, budget=budget_from(args))
    basis = Ideal(gb.basis, ideal.context)
    body = {
        **basis.to_json(),
        "order": args.order,
        "reduced": gb.reduced,
        "unit": gb.is_unit(),
        "pairs_processed": gb.pairs_processed,
        "text": [format_polynomial(g) for g in gb.basis],
    }
    emit("groebner", body, args, argv)
    status(f"\n✅ 기저 원소 {len(gb.basis)}개 (S-쌍 {gb.pairs_processed}개 처리)")
    return EXIT_OK


def run_config(args, argv) -> int:
    result = config.validate_config()
    print("📋 설정 검증 결과:")
    print(json.dumps(result, ensure_ascii=False, indent=2))
    return EXIT_OK if result["valid"] else EXIT_USAGE


COMMANDS = {
    "config": run_config,
    "steady-states": run_steady_states,
    "stability": run_stability,
    "hopf-scan": run_hopf_scan,
    "certify": run_certify,
    "verify-decomposition": run_verify_decomposition,
    "simulate": run_simulate,
    "sweep": run_sweep,
    "groebner": run_groebner,
}


# ===== 파서 =====

def build_parser() -> CliParser:
    common = CliParser(add_help=False)
    common.add_argument("--jobs", type=int, default=None, help="워커 수 (0 = 전체 코어)")
    common.add_argument("--seed", type=int, default=0, help="난수 시드 (보고서에 기록)")
    common.add_argument("--out", default=None, help="출력 파일 (없으면 stdout)")
    common.add_argument("--verbose", "-v", action="store_true", help="DEBUG 로그")
    common.add_argument("--max-pairs", type=int, default=config.MAX_PAIRS, help="그뢰브너 S-쌍 상한")
    common.add_argument("--budget-secs", type=float, default=config.BUDGET_SECS, help="그뢰브너 시간 상한(초)")

    def with_params(p: argparse.ArgumentParser, required_model: bool = True):
        p.add_argument("--model", required=required_model, choices=MODEL_IDS, help="모델 ID")
        group = p.add_mutually_exclusive_group()
        group.add_argument("--params", help="파라미터 (예: s=0.3,b=4,g=0.6 또는 s=3/10)")
        group.add_argument("--params-file", help="파라미터 JSON 파일")

    parser = CliParser(
        prog="steadycert",
        description="리프레실레이터 정상상태/안정성 인증 도구",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
예시:
  # 설정 확인
  steadycert config

  # 정상상태와 안정성
  steadycert steady-states --model rep3d --params s=0.3,b=4,g=0.6
  steadycert stability --model bwd6d --params s=1,b=10,g=0.2

  # 표본 인증과 분해 검증
  steadycert certify --model bwd6d --samples 10 --seed 1
  steadycert verify-decomposition --which J --seed 7

  # 시뮬레이션
  steadycert simulate --model rep3d --params s=0.3,b=4,g=0.6 --init 1,2,2 --out traj.csv
        """,
    )

    subparsers = parser.add_subparsers(dest="command", help="실행할 명령")

    # config 명령
    subparsers.add_parser("config", help="설정 검증")

    # steady-states 명령
    p = subparsers.add_parser("steady-states", parents=[common], help="정상상태 계산")
    with_params(p)

    # stability 명령
    p = subparsers.add_parser("stability", parents=[common], help="양의 정상상태 안정성")
    with_params(p)

    # hopf-scan 명령
    p = subparsers.add_parser("hopf-scan", parents=[common], help="Hopf 조건 반증 스캔")
    p.add_argument("--model", required=True, choices=MODEL_IDS, help="모델 ID")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--grid", help='격자 (예: "s:1e-2:1e2:10,b:1e-2:1e2:10,g:1e-2:1e2:10")')
    source.add_argument("--samples", type=int, help="로그 균등 표본 수")
    p.add_argument("--log", action="store_true", help="로그 간격 격자")
    p.add_argument("--range", default="1e-2:1e2", help="표본 범위 lo:hi")
    p.add_argument("--fixed", help="고정 파라미터 (예: n=10)")

    # certify 명령
    p = subparsers.add_parser("certify", parents=[common], help="양의 정상상태 유일성 인증")
    p.add_argument("--model", required=True, choices=REPRESSILATOR_MODELS, help="모델 ID")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--params", help="단일 파라미터 점")
    group.add_argument("--params-file", help="파라미터 JSON 파일")
    p.add_argument("--samples", type=int, default=1000, help="로그 균등 표본 수")
    p.add_argument("--range", default="1e-3:1e3", help="표본 범위 lo:hi")
    p.add_argument("--allwright", action="store_true", help="rep3d 순환 사상 Φ 검사 (--params 필요)")

    # verify-decomposition 명령
    p = subparsers.add_parser("verify-decomposition", parents=[common], help="이데알 분해 검증")
    p.add_argument("--which", required=True, choices=DECOMPOSITIONS, help="분해 이름")
    p.add_argument("--samples", type=int, default=MIN_SPECIALIZATIONS, help="특수화 수")

    # simulate 명령
    p = subparsers.add_parser("simulate", parents=[common], help="궤적 적분")
    with_params(p)
    p.add_argument("--init", required=True, help="초기 상태 (예: 1,2,2)")
    p.add_argument("--t-end", type=float, default=None, help="종료 시각 (기본: 모델별)")
    p.add_argument("--rtol", type=float, default=None, help="상대 허용오차")
    p.add_argument("--atol", type=float, default=None, help="절대 허용오차")
    p.add_argument("--format", choices=("json", "csv"), default=None, help="출력 형식 (기본: 확장자)")

    # sweep 명령
    p = subparsers.add_parser("sweep", parents=[common], help="파라미터 격자 스윕")
    p.add_argument("--model", required=True, choices=MODEL_IDS, help="모델 ID")
    p.add_argument("--grid", required=True, help="격자 (name:lo:hi:count,...)")
    p.add_argument("--log", action="store_true", help="로그 간격 격자")
    p.add_argument("--fixed", help="고정 파라미터 (예: s=0,n=2)")
    p.add_argument("--x0", default=DEFAULT_X0_POLICY, help="초기 상태 정책 fixed:<v,...> | perturb:<rel>")
    p.add_argument("--t-end", type=float, default=None, help="종료 시각")
    p.add_argument("--no-simulate", action="store_true", help="안정성 판정만")
    p.add_argument("--format", choices=("json", "csv"), default=None, help="출력 형식 (기본: 확장자)")

    # groebner 명령
    p = subparsers.add_parser("groebner", parents=[common], help="그뢰브너 기저 계산")
    p.add_argument("--input", required=True, help="이데알 JSON 파일")
    p.add_argument("--order", choices=("lex", "degrevlex"), default="degrevlex", help="단항식 순서")
    p.add_argument("--reduce", action="store_true", help="축약 기저")

    return parser


def setup_logging(verbose: bool = False) -> None:
    level = logging.DEBUG if verbose else getattr(logging, config.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    CLI 진입점

    Returns:
        종료 코드 (0 성공, 1 사용법/정의역 오류, 2 수학적 기대 위반)
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    setup_logging(getattr(args, "verbose", False))

    try:
        return COMMANDS[args.command](args, argv)
    except CertificationError as e:
        status(f"❌ 인증 실패: {e}")
        return EXIT_VIOLATION
    except (SteadyCertError, ValueError, KeyError, FileNotFoundError) as e:
        status(f"❌ 오류: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
