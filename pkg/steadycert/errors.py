"""
예외 계층

모든 도구 오류는 SteadyCertError를 상속한다.
CLI는 CertificationError를 종료 코드 2로, 나머지는 1로 매핑한다.
"""

from typing import Optional


class SteadyCertError(Exception):
    """steadycert 기본 예외"""


class ContextError(SteadyCertError, ValueError):
    """변수 컨텍스트(길이/이름) 불일치"""


class ResourceBudgetError(SteadyCertError):
    """그뢰브너 계산 예산(쌍 개수/시간) 초과"""

    def __init__(self, message: str, pairs: int = 0, elapsed: float = 0.0):
        super().__init__(message)
        self.pairs = pairs
        self.elapsed = elapsed


class ModelDomainError(SteadyCertError, ValueError):
    """모델 정의역 위반 (분모 0 이하, 양수가 아닌 파라미터 등)"""


class IntegrationError(SteadyCertError):
    """수치 적분 실패 (스텝 언더플로, 양의 상한 이탈 등)"""

    def __init__(self, message: str, t: Optional[float] = None, state: Optional[list] = None):
        super().__init__(message)
        self.t = t
        self.state = state


class StabilityError(SteadyCertError):
    """고유값 계산 실패"""


class CertificationError(SteadyCertError):
    """수학적 기대가 깨졌거나 인증을 완료할 수 없음"""
