"""
0차원 다항식 연립방정식의 실근 열거

1. lex 그뢰브너 기저 (변수 순서 = 컨텍스트 순서, 마지막 변수가 가장 낮음)
2. shape 위치 확인: {x_i − φ_i(x_k)} ∪ {q(x_k)}
3. 아니면 분리 일차형식 t = Σ c_i x_i 를 새 마지막 변수로 추가해 다시 시도
4. q의 제곱인수 없는 부분의 실근을 Sturm으로 분리하고 φ_i로 좌표 복원
모든 실근이 정확한 정의다항식 + 분리 구간을 가진 대수적 점으로 나온다.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

from steadycert.errors import CertificationError
from steadycert.exactalg.monomial import LEX
from steadycert.exactalg.polynomial import Polynomial
from steadycert.groebner.buchberger import Budget
from steadycert.groebner.ideals import Ideal
from steadycert.realroots import univariate as uv
from steadycert.realroots.algebraic import AlgebraicPoint
from steadycert.realroots.sturm import isolate_roots

logger = logging.getLogger(__name__)

SEPARATING_VAR = "sep_t"

# 분리 일차형식 계수 후보 (1, m, m², ...)
SEPARATING_TRIALS = (1, 2, 3, 5, 7, 11)


@dataclass
class ZeroDimSolution:
    """실근 열거 결과"""
    variables: tuple[str, ...]
    eliminant: list[Fraction]
    points: list[AlgebraicPoint]
    separating_form: Optional[tuple[Fraction, ...]] = None
    basis_size: int = 0
    pairs_processed: int = 0
    unit: bool = False
    notes: list[str] = field(default_factory=list)

    def positive_points(self) -> list[AlgebraicPoint]:
        return [p for p in self.points if p.is_positive()]

    def to_dict(self) -> dict[str, Any]:
        return {
            "variables": list(self.variables),
            "eliminant_degree": len(self.eliminant) - 1,
            "real_solutions": len(self.points),
            "positive_solutions": len(self.positive_points()),
            "separating_form": [str(c) for c in self.separating_form] if self.separating_form else None,
            "basis_size": self.basis_size,
            "pairs_processed": self.pairs_processed,
            "points": [p.to_dict() for p in self.points],
        }


def _shape_position(basis: Sequence[Polynomial], context: tuple[str, ...]) -> Optional[tuple[list, list]]:
    """
    축약 lex 기저가 shape 위치면 (q의 조밀 계수, [φ_1, ..., φ_{k−1}]) 아니면 None
    """
    last = context[-1]
    k = len(context)
    if len(basis) != k:
        return None
    univariate = [g for g in basis if set(g.variables_used()) <= {last}]
    if len(univariate) != 1:
        return None
    q = uv.as_dense(univariate[0].restrict_context((last,)))
    images: list[list[Fraction]] = []
    for i, var in enumerate(context[:-1]):
        x = Polynomial.variable(context, var, basis[0].order)
        match = None
        for g in basis:
            lead = g.leading_monomial
            if lead[i] == 1 and sum(lead) == 1:
                rest = x - g
                if set(rest.variables_used()) <= {last}:
                    match = uv.as_dense(rest.restrict_context((last,)))
                break
        if match is None:
            return None
        images.append(match)
    return q, images


def _points_from_shape(
    q: list[Fraction],
    images: Sequence[list[Fraction]],
    context: tuple[str, ...],
    keep: tuple[str, ...],
) -> list[AlgebraicPoint]:
    """q의 실근마다 대수적 점 (keep 변수만, 마지막 변수는 t 자신)"""
    sf = uv.squarefree_part(q)
    coords = {var: img for var, img in zip(context[:-1], images)}
    coords[context[-1]] = [Fraction(0), Fraction(1)]
    mapped = tuple(tuple(uv.strip(coords[v])) for v in keep)
    return [AlgebraicPoint(tuple(sf), iv, mapped, keep) for iv in isolate_roots(sf)]


def solve_zero_dimensional(
    polynomials: Sequence[Polynomial],
    budget: Optional[Budget] = None,
) -> ZeroDimSolution:
    """
    컨텍스트 변수에 대한 모든 실근 (정확한 대수적 점)

    Args:
        polynomials: 같은 컨텍스트의 다항식 (파라미터가 이미 대입된 상태)
        budget: 그뢰브너 예산

    Returns:
        ZeroDimSolution

    Raises:
        CertificationError: 해집합이 0차원이 아니거나 분리 일차형식을 찾지 못할 때
        ResourceBudgetError: 예산 초과
    """
    if not polynomials:
        raise ValueError("다항식이 없습니다.")
    context = polynomials[0].context
    ideal = Ideal(list(polynomials), context)

    # 1. 원래 변수 순서의 lex 기저
    gb = ideal.groebner(LEX, budget)
    if gb.is_unit():
        return ZeroDimSolution(context, [Fraction(1)], [], basis_size=1,
                               pairs_processed=gb.pairs_processed, unit=True)
    shape = _shape_position(gb.basis, context)
    if shape is not None:
        q, images = shape
        points = _points_from_shape(q, images, context, context)
        logger.debug("shape 위치: 소거 다항식 차수 %d, 실근 %d개", len(q) - 1, len(points))
        return ZeroDimSolution(context, q, points, basis_size=len(gb.basis),
                               pairs_processed=gb.pairs_processed)

    # 2. 분리 일차형식
    ext = context + (SEPARATING_VAR,)
    t = Polynomial.variable(ext, SEPARATING_VAR)
    base = [p.extend_context(ext) for p in ideal.generators]
    notes = ["원래 변수 순서에서 shape 위치가 아님"]
    for m in SEPARATING_TRIALS:
        coeffs = tuple(Fraction(m) ** i for i in range(len(context)))
        form = t
        for c, var in zip(coeffs, context):
            form = form - Polynomial.variable(ext, var).scale(c)
        ext_gb = Ideal(base + [form], ext).groebner(LEX, budget)
        shape = _shape_position(ext_gb.basis, ext)
        if shape is None:
            notes.append(f"분리 형식 계수 {m} 실패")
            continue
        q, images = shape
        points = _points_from_shape(q, images, ext, context)
        logger.debug("분리 형식 m=%d: 소거 다항식 차수 %d, 실근 %d개", m, len(q) - 1, len(points))
        return ZeroDimSolution(context, q, points, separating_form=coeffs,
                               basis_size=len(ext_gb.basis),
                               pairs_processed=gb.pairs_processed + ext_gb.pairs_processed,
                               notes=notes)
    raise CertificationError(
        f"분리 일차형식을 찾지 못했습니다 (해집합이 0차원이 아닐 수 있음): {context}"
    )

