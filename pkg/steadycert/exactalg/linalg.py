"""
나눗셈 없는 행렬 연산 (Berkowitz)

+, -, * 만 있으면 되므로 Fraction, float, Polynomial, RationalFunction
어느 환(ring) 원소에도 같은 코드가 동작한다.
"""

from typing import Any, Sequence

Matrix = Sequence[Sequence[Any]]


def _dot(row: Sequence[Any], vec: Sequence[Any]) -> Any:
    acc = row[0] * vec[0]
    for a, b in zip(row[1:], vec[1:]):
        acc = acc + a * b
    return acc


def berkowitz(matrix: Matrix) -> list[Any]:
    """
    특성다항식 det(λI − A)의 계수 [1, c1, ..., cn] (내림차순, 모닉)

    Raises:
        ValueError: 정사각 행렬이 아닐 때
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("정사각 행렬이 필요합니다.")
    vect: list[Any] = [1]
    for k in range(n):
        row = list(matrix[k][:k])
        col = [matrix[i][k] for i in range(k)]
        sub = [list(r[:k]) for r in matrix[:k]]
        # Toeplitz 열: 1, -a_kk, -R·C, -R·M·C, ...
        toeplitz = [1, -matrix[k][k]]
        vec = col
        for _ in range(k):
            toeplitz.append(-_dot(row, vec))
            vec = [_dot(sub[i], vec) for i in range(k)]
        new = []
        for i in range(k + 2):
            acc = None
            for j in range(max(0, i - k - 1), min(i, k) + 1):
                term = toeplitz[i - j] * vect[j]
                acc = term if acc is None else acc + term
            new.append(acc)
        vect = new
    return vect


def determinant(matrix: Matrix) -> Any:
    """행렬식 = (-1)^n · c_n"""
    n = len(matrix)
    if n == 0:
        return 1
    coeffs = berkowitz(matrix)
    return coeffs[n] if n % 2 == 0 else -coeffs[n]
