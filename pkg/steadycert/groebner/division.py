"""
다변수 나눗셈과 S-다항식

normal_form은 선행항을 힙으로 관리한다.
제수 목록 순서대로 검사하여 처음으로 나누어 떨어지는 제수를 사용한다.
"""

import heapq
from fractions import Fraction
from typing import Optional, Sequence

from steadycert.errors import ContextError
from steadycert.exactalg.monomial import (
    TermOrder,
    lcm_monomial,
    monomial_div,
    monomial_divides,
)
from steadycert.exactalg.polynomial import Polynomial


def _check_context(f: Polynomial, divisors: Sequence[Polynomial]) -> None:
    for g in divisors:
        if g.context != f.context:
            raise ContextError(f"컨텍스트가 다릅니다: {f.context} vs {g.context}")


def normal_form(
    f: Polynomial,
    divisors: Sequence[Polynomial],
    order: Optional[TermOrder] = None,
    with_quotients: bool = True,
) -> tuple[Optional[list[Polynomial]], Polynomial]:
    """
    f를 divisors로 나눈 몫과 나머지

    f = Σ qᵢgᵢ + r 이고 r의 어떤 항도 LT(gᵢ)로 나누어지지 않는다.

    Args:
        f: 피제수
        divisors: 제수 목록 (0 다항식은 무시)
        order: 항 순서 (None이면 f의 순서)
        with_quotients: 몫 계산 여부

    Returns:
        (몫 목록 또는 None, 나머지)

    Raises:
        ContextError: 컨텍스트 불일치
    """
    _check_context(f, divisors)
    order = order or f.order
    ctx = f.context

    # 1. 제수의 선행항 준비
    prepared = []
    for g in divisors:
        if g.is_zero():
            prepared.append(None)
            continue
        g = g.with_order(order)
        lc, lm = g.terms[0]
        prepared.append((lc, lm, g.terms[1:]))

    quotients: list[dict] = [{} for _ in divisors]
    remainder: dict = {}

    # 2. 힙 기반 축약 (키를 음수로 뒤집어 최대 힙으로 사용)
    p = f.as_dict()
    heap = [(tuple(-x for x in order.key(m)), m) for m in p]
    heapq.heapify(heap)
    queued = set(p)

    while heap:
        _, mon = heapq.heappop(heap)
        queued.discard(mon)
        coef = p.pop(mon, None)
        if not coef:
            continue
        for idx, item in enumerate(prepared):
            if item is None:
                continue
            lc, lm, tail = item
            if monomial_divides(lm, mon):
                factor = coef / lc
                shift = monomial_div(mon, lm)
                if with_quotients:
                    quotients[idx][shift] = quotients[idx].get(shift, Fraction(0)) + factor
                for c, m in tail:
                    target = tuple(a + b for a, b in zip(m, shift))
                    value = p.get(target, 0) - factor * c
                    if value:
                        p[target] = value
                        if target not in queued:
                            queued.add(target)
                            heapq.heappush(heap, (tuple(-x for x in order.key(target)), target))
                    else:
                        p.pop(target, None)
                break
        else:
            remainder[mon] = coef

    rem = Polynomial(ctx, remainder, order)
    if not with_quotients:
        return None, rem
    return [Polynomial(ctx, q, order) for q in quotients], rem


def reduce(f: Polynomial, divisors: Sequence[Polynomial], order: Optional[TermOrder] = None) -> Polynomial:
    """나머지만 반환"""
    return normal_form(f, divisors, order, with_quotients=False)[1]


def s_polynomial(f: Polynomial, g: Polynomial, order: Optional[TermOrder] = None) -> Polynomial:
    """
    S(f, g) = (x^γ/LT(f))·f − (x^γ/LT(g))·g, x^γ = lcm(LM(f), LM(g))

    Raises:
        ValueError: 0 다항식 입력
        ContextError: 컨텍스트 불일치
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("S-다항식의 입력은 0이 아니어야 합니다.")
    _check_context(f, [g])
    order = order or f.order
    f = f.with_order(order)
    g = g.with_order(order)
    lc_f, lm_f = f.terms[0]
    lc_g, lm_g = g.terms[0]
    gamma = lcm_monomial(lm_f, lm_g)
    return f.mul_term(Fraction(1) / lc_f, monomial_div(gamma, lm_f)) - g.mul_term(
        Fraction(1) / lc_g, monomial_div(gamma, lm_g)
    )
