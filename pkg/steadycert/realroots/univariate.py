"""
유리수 계수 일변수 다항식 (조밀 표현)

계수 목록은 오름차순 [a0, a1, ..., an] 이고 끝의 0은 제거한다.
빈 목록은 0 다항식이다.
"""

from fractions import Fraction
from typing import Sequence, Union

from steadycert.exactalg.polynomial import Polynomial

Dense = list[Fraction]


def strip(coeffs: Sequence) -> Dense:
    result = [Fraction(c) for c in coeffs]
    while result and result[-1] == 0:
        result.pop()
    return result


def as_dense(p: Union[Polynomial, Sequence]) -> Dense:
    """Polynomial 또는 계수 목록을 조밀 표현으로"""
    if isinstance(p, Polynomial):
        return strip(p.to_dense())
    return strip(p)


def degree(p: Dense) -> int:
    return len(p) - 1


def add(p: Dense, q: Dense) -> Dense:
    n = max(len(p), len(q))
    return strip([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p: Dense, q: Dense) -> Dense:
    return add(p, [-c for c in q])


def mul(p: Dense, q: Dense) -> Dense:
    if not p or not q:
        return []
    result = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                result[i + j] += a * b
    return strip(result)


def scale(p: Dense, c) -> Dense:
    return strip([a * c for a in p])


def power(p: Dense, e: int) -> Dense:
    result: Dense = [Fraction(1)]
    for _ in range(e):
        result = mul(result, p)
    return result


def derivative(p: Dense) -> Dense:
    return strip([k * p[k] for k in range(1, len(p))])


def divmod_dense(p: Dense, q: Dense) -> tuple[Dense, Dense]:
    """p = quot·q + rem, deg rem < deg q"""
    if not q:
        raise ZeroDivisionError("0 다항식으로 나눌 수 없습니다.")
    rem = list(p)
    if len(rem) < len(q):
        return [], strip(rem)
    quot = [Fraction(0)] * (len(rem) - len(q) + 1)
    lead = q[-1]
    for k in range(len(rem) - len(q), -1, -1):
        coef = rem[k + len(q) - 1] / lead
        quot[k] = coef
        if coef:
            for i, c in enumerate(q):
                rem[k + i] -= coef * c
    return strip(quot), strip(rem[: len(q) - 1])


def monic(p: Dense) -> Dense:
    if not p:
        return []
    lead = p[-1]
    return [c / lead for c in p]


def gcd(p: Dense, q: Dense) -> Dense:
    """모닉 최대공약수 (둘 다 0이면 0)"""
    a, b = strip(p), strip(q)
    while b:
        a, b = b, divmod_dense(a, b)[1]
    return monic(a)


def squarefree_part(p: Dense) -> Dense:
    """p / gcd(p, p′) (모닉)"""
    p = strip(p)
    if len(p) <= 2:
        return monic(p) if p else []
    g = gcd(p, derivative(p))
    return monic(divmod_dense(p, g)[0])


def evaluate(p: Dense, x) -> Fraction:
    """Horner 정확 평가"""
    result = Fraction(0)
    for c in reversed(p):
        result = result * x + c
    return result


def evaluate_float(p: Dense, x: float) -> float:
    result = 0.0
    for c in reversed(p):
        result = result * x + float(c)
    return result


def evaluate_interval(p: Dense, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """
    구간 Horner 평가 [lo, hi] 위 p 값의 포함 구간 (정확한 유리수 끝점)
    """
    low = high = Fraction(0)
    for c in reversed(p):
        products = (low * lo, low * hi, high * lo, high * hi)
        low = min(products) + c
        high = max(products) + c
    return low, high


def compose(p: Dense, q: Dense) -> Dense:
    """p(q(t))"""
    result: Dense = []
    for c in reversed(p):
        result = add(mul(result, q), [c] if c else [])
    return result


def to_polynomial(p: Dense, context: Sequence[str], var: str) -> Polynomial:
    return Polynomial.from_dense(p, context, var)


def from_polynomial_images(poly: Polynomial, images: Sequence[Dense]) -> Dense:
    """
    다변수 다항식의 각 변수에 일변수 다항식을 대입 (x_i → images[i](t))
    """
    cache: dict = {}

    def pow_image(i: int, e: int) -> Dense:
        key = (i, e)
        if key not in cache:
            cache[key] = mul(pow_image(i, e - 1), images[i]) if e > 1 else list(images[i])
        return cache[key]

    result: Dense = []
    for coef, mon in poly.terms:
        term: Dense = [coef]
        for i, e in enumerate(mon):
            if e:
                term = mul(term, pow_image(i, e))
        result = add(result, term)
    return result
