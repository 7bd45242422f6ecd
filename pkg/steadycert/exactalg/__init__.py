"""
정확한 대수 커널

- Rational: fractions.Fraction
- Monomial / TermOrder: 지수 튜플과 lex, degrevlex, block 순서
- Polynomial: 유리수 계수 다변수 다항식
- RationalFunction: 알려진 분모 인수를 가진 유리함수
"""

from steadycert.exactalg.monomial import (
    DEGREVLEX,
    LEX,
    Monomial,
    Ordering,
    TermOrder,
    block_order,
    compare,
    lcm_monomial,
    parse_order,
)
from steadycert.exactalg.polynomial import Polynomial
from steadycert.exactalg.rational import Rational, rational_to_str, to_rational
from steadycert.exactalg.parser import parse_polynomial
from steadycert.exactalg.ratfunc import RationalFunction
from steadycert.exactalg.codec import polynomial_from_json, polynomial_to_json
from steadycert.exactalg.linalg import berkowitz, determinant


def poly_arith(op: str, p: Polynomial, q) -> Polynomial:
    """
    이름으로 다항식 연산 (add | sub | mul | scale)

    Raises:
        ContextError: 컨텍스트 불일치
    """
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"알 수 없는 연산: {op}")


def leading_term(p: Polynomial, order: TermOrder):
    """주어진 순서에서의 선행항 (계수, 단항식)"""
    return p.leading_term(order)


__all__ = [
    "DEGREVLEX",
    "LEX",
    "Monomial",
    "Ordering",
    "Polynomial",
    "Rational",
    "RationalFunction",
    "TermOrder",
    "berkowitz",
    "block_order",
    "compare",
    "determinant",
    "lcm_monomial",
    "leading_term",
    "parse_order",
    "parse_polynomial",
    "poly_arith",
    "polynomial_from_json",
    "polynomial_to_json",
    "rational_to_str",
    "to_rational",
]
