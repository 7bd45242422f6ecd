"""
단항식과 항 순서(term order)

단항식은 지수 튜플이다. 길이는 변수 컨텍스트의 변수 개수와 같다.
지원하는 순서:
- lex: 왼쪽부터 읽어 처음으로 다른 지수가 큰 쪽이 크다
- degrevlex: 전체 차수 우선, 같으면 오른쪽부터 읽어 처음 다른 지수가 작은 쪽이 크다
- block(k): 앞 k개 변수 블록을 먼저 비교(소거 순서), 블록 내부는 degrevlex
"""

from dataclasses import dataclass
from enum import IntEnum

from steadycert.errors import ContextError

Monomial = tuple[int, ...]


class Ordering(IntEnum):
    """비교 결과"""
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _degrevlex_key(mon: Monomial) -> tuple:
    return (sum(mon),) + tuple(-e for e in reversed(mon))


@dataclass(frozen=True)
class TermOrder:
    """항 순서 (kind: lex | degrevlex | block, block이면 split = 앞 블록 크기)"""
    kind: str = "lex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex", "block"):
            raise ValueError(f"알 수 없는 항 순서: {self.kind}")
        if self.kind == "block" and self.split < 0:
            raise ValueError("block 순서의 split은 0 이상이어야 합니다.")

    def key(self, mon: Monomial) -> tuple:
        """정렬 키: 정수 튜플, 클수록 큰 단항식 (block은 두 블록 키를 이어 붙임)"""
        if self.kind == "lex":
            return mon
        if self.kind == "degrevlex":
            return _degrevlex_key(mon)
        k = self.split
        return _degrevlex_key(mon[:k]) + _degrevlex_key(mon[k:])

    def __str__(self) -> str:
        if self.kind == "block":
            return f"block({self.split})"
        return self.kind


LEX = TermOrder("lex")
DEGREVLEX = TermOrder("degrevlex")


def block_order(k: int) -> TermOrder:
    """앞 k개 변수를 소거하는 블록 순서"""
    return TermOrder("block", k)


def parse_order(name: str) -> TermOrder:
    """
    문자열에서 항 순서 생성

    Args:
        name: "lex", "degrevlex", "block:k"
    """
    text = name.strip().lower()
    if text in ("lex", "lp"):
        return LEX
    if text in ("degrevlex", "grevlex", "dp"):
        return DEGREVLEX
    if text.startswith("block"):
        _, _, k = text.partition(":")
        return block_order(int(k or 0))
    raise ValueError(f"알 수 없는 항 순서: {name}")


def _check_lengths(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise ContextError(f"단항식 길이가 다릅니다: {len(a)} != {len(b)}")


def compare(a: Monomial, b: Monomial, order: TermOrder) -> Ordering:
    """
    두 단항식 비교

    Raises:
        ContextError: 길이 불일치
    """
    _check_lengths(a, b)
    ka, kb = order.key(a), order.key(b)
    if ka > kb:
        return Ordering.GREATER
    if ka < kb:
        return Ordering.LESS
    return Ordering.EQUAL


def lcm_monomial(a: Monomial, b: Monomial) -> Monomial:
    """최소공배 단항식 (지수별 최댓값)"""
    _check_lengths(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """a | b 여부"""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b (b | a 가정)"""
    return tuple(x - y for x, y in zip(a, b))


def total_degree(mon: Monomial) -> int:
    return sum(mon)
