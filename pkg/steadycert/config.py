"""
설정 관리 모듈

환경변수 로딩 및 전역 설정 관리
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# .env 파일 로드
load_dotenv()

# 프로젝트 경로
BASE_DIR = Path(__file__).resolve().parent
PROJECT_ROOT = BASE_DIR.parent

# 데이터 파일 경로 (긴 다항식 목록)
DATA_DIR = BASE_DIR / "data"


def _env_float(name: str, default: float) -> float:
    """환경변수를 float으로 읽기 (잘못된 값이면 기본값)"""
    raw = os.getenv(name, "")
    try:
        return float(raw) if raw else default
    except ValueError:
        return default


def _env_int(name: str, default: int) -> int:
    """환경변수를 int로 읽기 (잘못된 값이면 기본값)"""
    raw = os.getenv(name, "")
    try:
        return int(raw) if raw else default
    except ValueError:
        return default


# 그뢰브너 기저 계산 예산
BUDGET_SECS = _env_float("STEADYCERT_BUDGET_SECS", 60.0)
MAX_PAIRS = _env_int("STEADYCERT_MAX_PAIRS", 20000)

# 병렬 작업 수 (0 = 전체 코어)
JOBS = _env_int("STEADYCERT_JOBS", 0)

# 적분기 기본 허용오차
REL_TOL = _env_float("STEADYCERT_REL_TOL", 1e-8)
ABS_TOL = _env_float("STEADYCERT_ABS_TOL", 1e-10)

# 로그 레벨
LOG_LEVEL = os.getenv("STEADYCERT_LOG_LEVEL", "WARNING").upper()

# 모델별 기본 적분 구간
DEFAULT_T_END = {
    "rep3d": 40.0,
    "fwd6d": 60.0,
    "bwd6d": 60.0,
    "goodwin": 200.0,
    "elowitz": 200.0,
}

# 보고서 스키마 버전
REPORT_SCHEMA = 1


def resolve_jobs(jobs: int | None = None) -> int:
    """
    실제 사용할 워커 수 결정

    Args:
        jobs: 요청된 워커 수 (None이면 STEADYCERT_JOBS, 0이면 전체 코어)
    """
    requested = JOBS if jobs is None else jobs
    if requested <= 0:
        return os.cpu_count() or 1
    return requested


def validate_config() -> dict:
    """
    설정 유효성 검사
    """
    errors = []
    warnings = []

    if BUDGET_SECS <= 0:
        errors.append("STEADYCERT_BUDGET_SECS는 양수여야 합니다.")
    if MAX_PAIRS <= 0:
        errors.append("STEADYCERT_MAX_PAIRS는 양수여야 합니다.")
    if REL_TOL <= 0 or ABS_TOL <= 0:
        errors.append("STEADYCERT_REL_TOL / STEADYCERT_ABS_TOL는 양수여야 합니다.")
    if not DATA_DIR.exists():
        errors.append(f"데이터 디렉토리를 찾을 수 없습니다: {DATA_DIR}")

    if BUDGET_SECS < 10:
        warnings.append("그뢰브너 예산이 10초 미만입니다. (인증 표본이 ResourceBudgetError 로 실패할 수 있음)")
    if LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        warnings.append(f"알 수 없는 로그 레벨: {LOG_LEVEL} (WARNING 사용)")

    return {
        "valid": len(errors) == 0,
        "errors": errors,
        "warnings": warnings,
        "config": {
            "budget_secs": BUDGET_SECS,
            "max_pairs": MAX_PAIRS,
            "jobs": JOBS,
            "rel_tol": REL_TOL,
            "abs_tol": ABS_TOL,
            "log_level": LOG_LEVEL,
            "data_dir": str(DATA_DIR),
        }
    }
