"""
Buchberger 알고리즘

- 쌍 선택: normal 전략 (lcm이 가장 작은 쌍 먼저)
- 쌍 제거: Gebauer–Möller 판정 (서로소 선행단항식, 연쇄 판정)
- 새 원소는 모닉으로 만들어 삽입 (계수 증가 억제)
- 예산(처리한 쌍 수, 경과 시간)을 넘으면 ResourceBudgetError
"""

import heapq
import logging
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from steadycert import config
from steadycert.errors import ResourceBudgetError
from steadycert.exactalg.monomial import (
    TermOrder,
    lcm_monomial,
    monomial_divides,
    monomial_mul,
)
from steadycert.exactalg.polynomial import Polynomial
from steadycert.groebner.division import reduce, s_polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Budget:
    """그뢰브너 계산 예산"""
    max_pairs: int = field(default_factory=lambda: config.MAX_PAIRS)
    max_seconds: float = field(default_factory=lambda: config.BUDGET_SECS)

    def to_dict(self) -> dict:
        return {"max_pairs": self.max_pairs, "max_seconds": self.max_seconds}


@dataclass
class GroebnerBasis:
    """그뢰브너 기저 계산 결과"""
    context: tuple[str, ...]
    order: TermOrder
    basis: list[Polynomial]
    reduced: bool = False
    pairs_processed: int = 0
    elapsed: float = 0.0
    generators: list[Polynomial] = field(default_factory=list)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return reduce(f.with_order(self.order), self.basis, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def is_unit(self) -> bool:
        """기저가 {1}인지 (빈 다양체)"""
        return any(g.is_constant() and not g.is_zero() for g in self.basis)

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.leading_monomial for g in self.basis]


def _update(
    basis: list[Polynomial],
    live: set,
    heap: list,
    f: Polynomial,
    order: TermOrder,
) -> None:
    """
    f를 기저에 추가하고 쌍 집합 갱신 (Gebauer–Möller)
    """
    lm_f = f.leading_monomial
    lms = [g.leading_monomial for g in basis]
    new_index = len(basis)

    # 1. 기존 쌍 중 연쇄 판정으로 불필요해진 쌍 제거
    for pair in list(live):
        i, j = pair
        gamma = lcm_monomial(lms[i], lms[j])
        if (
            monomial_divides(lm_f, gamma)
            and gamma != lcm_monomial(lms[i], lm_f)
            and gamma != lcm_monomial(lms[j], lm_f)
        ):
            live.discard(pair)

    # 2. 새 쌍을 lcm별로 묶고 극소 lcm만 남김
    groups: dict = {}
    for i, lm in enumerate(lms):
        groups.setdefault(lcm_monomial(lm, lm_f), []).append(i)
    kept: list = []
    for gamma in sorted(groups, key=order.key):
        if all(not monomial_divides(other, gamma) for other in kept):
            kept.append(gamma)

    # 3. 서로소 선행단항식 쌍이 있는 그룹은 통째로 버림
    for gamma in kept:
        members = groups[gamma]
        if any(gamma == monomial_mul(lms[i], lm_f) for i in members):
            continue
        pair = (min(members), new_index)
        live.add(pair)
        heapq.heappush(heap, (order.key(gamma), pair))

    basis.append(f)


def buchberger(
    generators: Sequence[Polynomial],
    order: TermOrder,
    budget: Optional[Budget] = None,
) -> GroebnerBasis:
    """
    그뢰브너 기저 계산

    Args:
        generators: 생성원 (같은 컨텍스트)
        order: 항 순서
        budget: 계산 예산

    Returns:
        GroebnerBasis (reduced=False)

    Raises:
        ResourceBudgetError: 예산 초과
    """
    budget = budget or Budget()
    polys = [g.with_order(order) for g in generators if not g.is_zero()]
    context = polys[0].context if polys else (generators[0].context if generators else ())
    start = time.monotonic()

    basis: list[Polynomial] = []
    live: set = set()
    heap: list = []
    for g in polys:
        _update(basis, live, heap, g.monic(), order)

    processed = 0
    while live:
        _, pair = heapq.heappop(heap)
        if pair not in live:
            continue
        live.discard(pair)
        processed += 1
        elapsed = time.monotonic() - start
        if processed > budget.max_pairs or elapsed > budget.max_seconds:
            logger.warning("그뢰브너 예산 초과: pairs=%d elapsed=%.1fs", processed, elapsed)
            raise ResourceBudgetError(
                f"그뢰브너 계산 예산 초과 (pairs={processed}, {elapsed:.1f}s)",
                pairs=processed,
                elapsed=elapsed,
            )
        i, j = pair
        remainder = reduce(s_polynomial(basis[i], basis[j], order), basis, order)
        if not remainder.is_zero():
            _update(basis, live, heap, remainder.monic(), order)
            if remainder.is_constant():
                # 1이 들어오면 나머지 쌍은 모두 0으로 축약된다
                live.clear()

    elapsed = time.monotonic() - start
    logger.debug("buchberger: %d개 생성원, %d쌍 처리, 기저 %d개, %.3fs", len(polys), processed, len(basis), elapsed)
    return GroebnerBasis(
        context=context,
        order=order,
        basis=basis,
        reduced=False,
        pairs_processed=processed,
        elapsed=elapsed,
        generators=polys,
    )


def minimalize(basis: Sequence[Polynomial], order: TermOrder) -> list[Polynomial]:
    """선행단항식이 다른 원소의 선행단항식으로 나누어지는 원소 제거"""
    result: list[Polynomial] = []
    for f in sorted(basis, key=lambda h: order.key(h.leading_monomial)):
        if all(not monomial_divides(g.leading_monomial, f.leading_monomial) for g in result):
            result.append(f)
    return result


def interreduce(basis: Sequence[Polynomial], order: TermOrder) -> list[Polynomial]:
    """극소 기저의 각 원소를 나머지 원소로 축약하고 모닉으로"""
    result = []
    for i, g in enumerate(basis):
        others = list(basis[:i]) + list(basis[i + 1:])
        result.append(reduce(g, others, order).monic())
    return result


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """
    유일한 축약 그뢰브너 기저 (선행단항식 오름차순 정렬)
    """
    if gb.reduced:
        return gb
    basis = [g.with_order(gb.order) for g in gb.basis if not g.is_zero()]
    if any(g.is_constant() for g in basis):
        one = Polynomial.constant(gb.context, 1, gb.order)
        reduced = [one]
    else:
        reduced = interreduce(minimalize(basis, gb.order), gb.order)
        reduced.sort(key=lambda h: gb.order.key(h.leading_monomial))
    return GroebnerBasis(
        context=gb.context,
        order=gb.order,
        basis=reduced,
        reduced=True,
        pairs_processed=gb.pairs_processed,
        elapsed=gb.elapsed,
        generators=gb.generators,
    )


def groebner_basis(
    generators: Sequence[Polynomial],
    order: TermOrder,
    reduced: bool = True,
    budget: Optional[Budget] = None,
) -> GroebnerBasis:
    """buchberger + (선택) reduce_basis"""
    gb = buchberger(generators, order, budget)
    return reduce_basis(gb) if reduced else gb
