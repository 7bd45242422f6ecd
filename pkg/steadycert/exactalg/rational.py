"""
정확한 유리수 도우미

계수체 Q는 fractions.Fraction(임의 정밀도 정수)으로 표현한다.
Fraction은 항상 기약분수이고 분모가 양수이며 0은 0/1이다.
"""

from decimal import Decimal, InvalidOperation
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction

RationalLike = Union[int, Fraction, str, float, Decimal]


def to_rational(value: RationalLike) -> Fraction:
    """
    값을 정확한 유리수로 변환

    "3/10", "0.3", "1e-3" 같은 문자열과 정수/Fraction을 받는다.
    float은 10진 표현(repr) 그대로 변환한다. ("0.1" → 1/10)

    Raises:
        ValueError: 해석할 수 없는 값
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"유리수로 변환할 수 없습니다: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError(f"유한한 값이 아닙니다: {value!r}")
        return Fraction(repr(float(value)))
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("빈 문자열은 유리수가 아닙니다.")
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                return Fraction(Decimal(num.strip())) / Fraction(Decimal(den.strip()))
            return Fraction(Decimal(text))
        except (InvalidOperation, ZeroDivisionError, ValueError) as exc:
            raise ValueError(f"유리수로 변환할 수 없습니다: {value!r}") from exc
    raise ValueError(f"유리수로 변환할 수 없습니다: {value!r}")


def rational_to_str(value: Fraction) -> str:
    """유리수를 "n" 또는 "n/d" 문자열로"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sign(value: Fraction) -> int:
    """부호 (-1, 0, 1)"""
    return (value > 0) - (value < 0)


def significant_rational(x: float, digits: int = 3) -> Fraction:
    """float을 유효숫자 digits자리 10진 유리수로 (표본 파라미터용)"""
    return Fraction(f"{x:.{digits}g}")


def power_of_two_ceiling(value: Fraction) -> Fraction:
    """value 이상인 가장 작은 2의 거듭제곱 (value > 0)"""
    if value <= 0:
        raise ValueError("양수가 필요합니다.")
    bound = Fraction(1)
    while bound < value:
        bound *= 2
    while bound / 2 >= value:
        bound /= 2
    return bound
