"""
다항식 JSON 코덱

형식:
    {"vars": ["x1","x3","x5"], "terms": [{"c": "num/den", "e": [i1, ..., in]}]}
또는 사람이 읽기 쉬운 텍스트:
    {"vars": [...], "expr": "2*s*x5+s+b*x5"}
"""

from typing import Any, Optional, Sequence

from steadycert.errors import ContextError
from steadycert.exactalg.monomial import LEX, TermOrder
from steadycert.exactalg.parser import parse_polynomial
from steadycert.exactalg.polynomial import Polynomial
from steadycert.exactalg.rational import rational_to_str, to_rational


def polynomial_to_json(p: Polynomial) -> dict[str, Any]:
    """정렬된 항 순서 그대로 직렬화"""
    return {
        "vars": list(p.context),
        "terms": [{"c": rational_to_str(c), "e": list(m)} for c, m in p.terms],
    }


def polynomial_from_json(
    obj: Any,
    context: Optional[Sequence[str]] = None,
    order: TermOrder = LEX,
) -> Polynomial:
    """
    JSON 객체(또는 텍스트)를 다항식으로

    Args:
        obj: {"vars", "terms"} / {"vars", "expr"} 객체 또는 다항식 텍스트
        context: 상위(Ideal)에서 정한 컨텍스트 (obj에 vars가 없을 때 사용)

    Raises:
        ContextError: vars가 context와 다를 때
        ValueError: 형식 오류
    """
    if isinstance(obj, str):
        if context is None:
            raise ValueError("텍스트 다항식에는 컨텍스트가 필요합니다.")
        return parse_polynomial(obj, context, order)
    if not isinstance(obj, dict):
        raise ValueError(f"다항식 JSON이 아닙니다: {type(obj).__name__}")
    variables = obj.get("vars", context)
    if variables is None:
        raise ValueError("다항식 JSON에 vars가 없습니다.")
    if context is not None and list(variables) != list(context):
        raise ContextError(f"다항식 vars {variables}가 컨텍스트 {list(context)}와 다릅니다.")
    if "expr" in obj:
        return parse_polynomial(obj["expr"], variables, order)
    terms = obj.get("terms")
    if terms is None:
        raise ValueError("다항식 JSON에 terms 또는 expr가 필요합니다.")
    pairs = []
    for term in terms:
        exps = term["e"]
        if len(exps) != len(variables):
            raise ContextError(f"지수 배열 길이 {len(exps)}가 vars 길이 {len(variables)}와 다릅니다.")
        pairs.append((to_rational(str(term["c"])), tuple(exps)))
    return Polynomial(variables, pairs, order)
