"""
다항식 이데알과 이데알 연산

- member: 그뢰브너 기저 나머지가 0인지
- eliminate: 블록 순서로 앞 k개 변수 소거
- intersect: t·I + (1−t)·J 에서 t 소거
- quotient: I:J = ∩_g (I ∩ ⟨g⟩)/g
- radical_member: Rabinowitsch (I + ⟨1 − t·f⟩ 에 1이 있는지)
"""

import logging
from typing import Any, Mapping, Optional, Sequence, Union

from steadycert.errors import ContextError
from steadycert.exactalg.codec import polynomial_from_json, polynomial_to_json
from steadycert.exactalg.monomial import DEGREVLEX, LEX, TermOrder, block_order
from steadycert.exactalg.parser import parse_polynomial
from steadycert.exactalg.polynomial import Polynomial, Scalar
from steadycert.groebner.buchberger import Budget, GroebnerBasis, groebner_basis

logger = logging.getLogger(__name__)


class Ideal:
    """이름 있는 변수 컨텍스트의 유한 생성 이데알 (0 생성원은 버림, 빈 목록은 0 이데알)"""

    def __init__(self, generators: Sequence[Polynomial], context: Optional[Sequence[str]] = None):
        if context is None:
            if not generators:
                raise ValueError("생성원이 없으면 컨텍스트를 지정해야 합니다.")
            context = generators[0].context
        ctx = tuple(context)
        for g in generators:
            if g.context != ctx:
                raise ContextError(f"생성원 컨텍스트 {g.context}가 이데알 컨텍스트 {ctx}와 다릅니다.")
        self.context = ctx
        self.generators: tuple[Polynomial, ...] = tuple(g for g in generators if not g.is_zero())
        self._bases: dict[TermOrder, GroebnerBasis] = {}

    @classmethod
    def from_strings(cls, exprs: Sequence[str], context: Sequence[str], order: TermOrder = LEX) -> "Ideal":
        return cls([parse_polynomial(e, context, order) for e in exprs], context)

    @classmethod
    def unit(cls, context: Sequence[str]) -> "Ideal":
        return cls([Polynomial.constant(context, 1)], context)

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def __len__(self) -> int:
        return len(self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.context != self.context:
            raise ContextError("컨텍스트가 다릅니다.")
        return Ideal(list(self.generators) + list(other.generators), self.context)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal<{gens}> in Q[{', '.join(self.context)}]"

    # ----------------------------------------------------------------- 기저

    def groebner(self, order: TermOrder = DEGREVLEX, budget: Optional[Budget] = None) -> GroebnerBasis:
        """축약 그뢰브너 기저 (순서별 캐시)"""
        if order not in self._bases:
            if self.is_zero_ideal():
                self._bases[order] = GroebnerBasis(self.context, order, [], reduced=True)
            else:
                self._bases[order] = groebner_basis(list(self.generators), order, True, budget)
        return self._bases[order]

    def is_unit(self, order: TermOrder = DEGREVLEX, budget: Optional[Budget] = None) -> bool:
        """1 ∈ I (실수/복소 다양체가 비었는지)"""
        return self.groebner(order, budget).is_unit()

    def contains(self, f: Polynomial, order: TermOrder = DEGREVLEX, budget: Optional[Budget] = None) -> bool:
        if f.context != self.context:
            raise ContextError("컨텍스트가 다릅니다.")
        if f.is_zero():
            return True
        return self.groebner(order, budget).contains(f)

    # ----------------------------------------------------------------- 변환

    def extend_context(self, context: Sequence[str]) -> "Ideal":
        return Ideal([g.extend_context(context) for g in self.generators], context)

    def specialize(self, values: Mapping[str, Scalar]) -> "Ideal":
        """
        일부 변수(파라미터)에 유리수를 대입한 이데알 (남은 변수 컨텍스트)
        """
        remaining = tuple(v for v in self.context if v not in values)
        gens = [g.subs(values).restrict_context(remaining) for g in self.generators]
        return Ideal(gens, remaining)

    # ----------------------------------------------------------------- JSON

    def to_json(self) -> dict[str, Any]:
        return {
            "vars": list(self.context),
            "generators": [polynomial_to_json(g) for g in self.generators],
        }

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> "Ideal":
        """
        {"vars": [...], "generators": [다항식 JSON 또는 텍스트, ...]}

        Raises:
            ValueError: 형식 오류
            ContextError: 생성원 vars 불일치
        """
        if "vars" not in obj or "generators" not in obj:
            raise ValueError("이데알 JSON에는 vars와 generators가 필요합니다.")
        context = list(obj["vars"])
        gens = [polynomial_from_json(g, context) for g in obj["generators"]]
        return cls(gens, context)


def _fresh_name(context: Sequence[str], base: str = "t") -> str:
    name = base
    k = 0
    while name in context:
        k += 1
        name = f"{base}{k}"
    return name


def member(f: Polynomial, ideal: Ideal, order: TermOrder = DEGREVLEX, budget: Optional[Budget] = None) -> bool:
    """f ∈ I 여부 (예산 초과는 ResourceBudgetError로 전파)"""
    return ideal.contains(f, order, budget)


def eliminate(ideal: Ideal, k: int, budget: Optional[Budget] = None) -> Ideal:
    """
    앞 k개 변수를 소거한 이데알 I ∩ Q[뒤 n−k개 변수]

    Returns:
        남은 변수 컨텍스트의 이데알 (없으면 0 이데알)
    """
    if k < 0 or k > len(ideal.context):
        raise ValueError(f"소거 변수 개수가 범위를 벗어났습니다: {k}")
    remaining = ideal.context[k:]
    if k == 0:
        gb = ideal.groebner(LEX, budget)
        return Ideal(gb.basis, ideal.context)
    gb = ideal.groebner(block_order(k), budget)
    kept = [
        g.restrict_context(remaining)
        for g in gb.basis
        if not any(g.leading_monomial[:k])
    ]
    logger.debug("eliminate: %d개 중 %d개 원소 유지", len(gb.basis), len(kept))
    return Ideal(kept, remaining)


def intersect(first: Ideal, second: Ideal, budget: Optional[Budget] = None) -> Ideal:
    """I ∩ J (보조 변수 t 소거)"""
    if first.context != second.context:
        raise ContextError("컨텍스트가 다릅니다.")
    if first.is_zero_ideal() or second.is_zero_ideal():
        return Ideal([], first.context)
    t = _fresh_name(first.context)
    ext = (t,) + first.context
    tt = Polynomial.variable(ext, t)
    gens = [tt * g.extend_context(ext) for g in first.generators]
    gens += [(1 - tt) * g.extend_context(ext) for g in second.generators]
    return eliminate(Ideal(gens, ext), 1, budget)


def quotient(first: Ideal, second: Ideal, budget: Optional[Budget] = None) -> Ideal:
    """
    이데알 몫 I:J

    g ∈ I 이면 I:⟨g⟩ = ⟨1⟩ 이므로 교집합에서 생략한다.
    """
    if first.context != second.context:
        raise ContextError("컨텍스트가 다릅니다.")
    pieces: list[Ideal] = []
    for g in second.generators:
        if first.contains(g, DEGREVLEX, budget):
            continue
        inter = intersect(first, Ideal([g], first.context), budget)
        divided = []
        for h in inter.generators:
            q = h.exact_divide(g.with_order(h.order))
            if q is None:
                raise ArithmeticError(f"교집합 원소가 {g}로 나누어지지 않습니다.")
            divided.append(q)
        pieces.append(Ideal(divided, first.context))
    if not pieces:
        return Ideal.unit(first.context)
    result = pieces[0]
    for piece in pieces[1:]:
        result = intersect(result, piece, budget)
    gb = result.groebner(DEGREVLEX, budget)
    return Ideal(gb.basis, first.context)


def radical_member(f: Polynomial, ideal: Ideal, budget: Optional[Budget] = None) -> bool:
    """f ∈ √I 여부"""
    if f.context != ideal.context:
        raise ContextError("컨텍스트가 다릅니다.")
    if f.is_zero():
        return True
    t = _fresh_name(ideal.context)
    ext = ideal.context + (t,)
    tt = Polynomial.variable(ext, t)
    gens = [g.extend_context(ext) for g in ideal.generators]
    gens.append(1 - tt * f.extend_context(ext))
    return Ideal(gens, ext).is_unit(DEGREVLEX, budget)
