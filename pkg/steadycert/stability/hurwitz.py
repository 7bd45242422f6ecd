"""
Hurwitz 행렬과 Hurwitz 행렬식

계수는 내림차순 [a0, a1, ..., an] 이다.
Fraction, RationalFunction 등 +, -, * 가 있는 환 원소면 모두 쓸 수 있다.
"""

from fractions import Fraction
from typing import Any, Sequence

from steadycert.exactalg.linalg import determinant
from steadycert.exactalg.rational import to_rational


def normalize_coefficients(coeffs: Sequence) -> list[Fraction]:
    """
    유리수 계수를 모닉으로 정규화

    Raises:
        ValueError: 차수가 1보다 작거나 최고차 계수가 0일 때
    """
    values = [to_rational(c) for c in coeffs]
    if len(values) < 2:
        raise ValueError("차수 1 이상의 다항식이 필요합니다.")
    lead = values[0]
    if lead == 0:
        raise ValueError("최고차 계수가 0입니다.")
    return [c / lead for c in values]


def hurwitz_matrix(coeffs: Sequence[Any], zero: Any = 0) -> list[list[Any]]:
    """
    n×n Hurwitz 행렬 H[i][j] = a_{2j−i+1} (0부터 세는 첨자, 범위 밖은 0)
    """
    n = len(coeffs) - 1

    def a(k: int) -> Any:
        return coeffs[k] if 0 <= k <= n else zero

    return [[a(2 * j - i + 1) for j in range(n)] for i in range(n)]


def hurwitz_minors(coeffs: Sequence[Any], count: int | None = None, zero: Any = 0) -> list[Any]:
    """선행 주소행렬식 Δ1..Δ_count (환 원소 그대로)"""
    matrix = hurwitz_matrix(coeffs, zero)
    n = len(matrix)
    count = n if count is None else count
    return [determinant([row[:k] for row in matrix[:k]]) for k in range(1, count + 1)]


def hurwitz_determinants(coeffs: Sequence) -> list[Fraction]:
    """
    Hurwitz 행렬식 Δ1..Δn

    Args:
        coeffs: 내림차순 유리수 계수 (모닉이 아니면 최고차 계수로 나눔)

    Returns:
        [Δ1, ..., Δn] (Δn = an·Δ_{n−1})

    Raises:
        ValueError: 차수 0 또는 최고차 계수 0
    """
    monic = normalize_coefficients(coeffs)
    return [Fraction(d) for d in hurwitz_minors(monic, zero=Fraction(0))]


def routh_hurwitz_stable(coeffs: Sequence) -> bool:
    """모든 근의 실수부가 음수인지 (모든 Δi > 0)"""
    return all(d > 0 for d in hurwitz_determinants(coeffs))
