"""
steadycert 패키지

리프레실레이터(repressilator) ODE 모델의 정상상태/안정성 인증 도구
- 정확한 유리수 다항식 커널과 그뢰브너 기저
- 실근 분리(Sturm)와 Routh-Hurwitz 판정
- 적응형 Runge-Kutta 시뮬레이션
"""

__version__ = "1.0.0"
