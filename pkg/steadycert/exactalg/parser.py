"""
다항식 텍스트 파서

"2*s*x5+s+b*x5-2*g*x5^2-g*x5" 같은 텍스트를 Polynomial로 변환한다.
지원 문법: + - * / ^ ** 괄호, 정수/소수/분수 상수.
나눗셈은 0이 아닌 상수로만 가능하다.
"""

import re
from fractions import Fraction
from typing import Sequence

from steadycert.errors import ContextError
from steadycert.exactalg.monomial import LEX, TermOrder
from steadycert.exactalg.polynomial import Polynomial

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+\.?\d*(?:[eE][-+]?\d+)?|\.\d+(?:[eE][-+]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>\*\*|[-+*/^()]))"
)


def tokenize(text: str) -> list[tuple[str, str]]:
    """토큰 목록 [(종류, 값)]"""
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"해석할 수 없는 문자 (위치 {pos}): {text[pos:pos + 10]!r}")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
        pos = match.end()
    return tokens


class _Parser:
    """재귀 하강 파서"""

    def __init__(self, text: str, context: tuple, order: TermOrder):
        self.tokens = tokenize(text)
        self.pos = 0
        self.context = context
        self.order = order

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        token = self.peek()
        self.pos += 1
        return token

    def expect(self, value: str):
        kind, got = self.take()
        if got != value:
            raise ValueError(f"'{value}'가 필요하지만 {got!r}가 나왔습니다.")

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ValueError("빈 식입니다.")
        result = self.expr()
        if self.pos != len(self.tokens):
            raise ValueError(f"남은 토큰이 있습니다: {self.tokens[self.pos:]}")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                result = result * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ValueError("0이 아닌 상수로만 나눌 수 있습니다.")
                result = result / rhs.constant_value()
        return result

    def unary(self) -> Polynomial:
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[1] in ("^", "**"):
            self.take()
            exponent = self.unary()
            if not exponent.is_constant():
                raise ValueError("지수는 상수여야 합니다.")
            value = exponent.constant_value()
            if value.denominator != 1 or value < 0:
                raise ValueError(f"지수는 음이 아닌 정수여야 합니다: {value}")
            return base ** int(value)
        return base

    def atom(self) -> Polynomial:
        kind, value = self.take()
        if kind == "num":
            return Polynomial.constant(self.context, Fraction(value), self.order)
        if kind == "name":
            if value not in self.context:
                raise ContextError(f"컨텍스트 {self.context}에 없는 변수: {value}")
            return Polynomial.variable(self.context, value, self.order)
        if value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ValueError(f"예상하지 못한 토큰: {value!r}")


def parse_polynomial(text: str, context: Sequence[str], order: TermOrder = LEX) -> Polynomial:
    """
    텍스트를 다항식으로 변환

    Args:
        text: 다항식 텍스트
        context: 변수 이름 목록
        order: 항 순서

    Raises:
        ValueError: 문법 오류
        ContextError: 컨텍스트에 없는 변수
    """
    return _Parser(text, tuple(context), order).parse()
