"""
유리수 계수 다변수 다항식

Polynomial은 불변 객체다.
- context: 변수 이름 튜플 (순서 있음)
- terms: (계수, 단항식) 튜플, 붙어 있는 항 순서로 엄격히 내림차순 정렬
- 0 계수와 중복 단항식은 없다. 선행항은 첫 번째 항이다.
"""

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from steadycert.errors import ContextError
from steadycert.exactalg.monomial import (
    LEX,
    Monomial,
    TermOrder,
    monomial_div,
    monomial_divides,
    monomial_mul,
)
from steadycert.exactalg.rational import rational_to_str, to_rational

Scalar = Union[int, Fraction]


class Polynomial:
    """Q[context] 위의 다항식"""

    __slots__ = ("_context", "_order", "_terms", "_dict", "_hash", "_float_eval")

    def __init__(
        self,
        context: Sequence[str],
        terms: Union[Mapping[Monomial, Scalar], Iterable[tuple[Scalar, Monomial]]] = (),
        order: TermOrder = LEX,
    ):
        """
        Args:
            context: 변수 이름 목록
            terms: {단항식: 계수} 또는 (계수, 단항식) 목록 (중복은 합산)
            order: 항 순서
        """
        ctx = tuple(context)
        if len(set(ctx)) != len(ctx):
            raise ContextError(f"변수 이름이 중복됩니다: {ctx}")
        items = terms.items() if isinstance(terms, Mapping) else ((m, c) for c, m in terms)
        data: dict[Monomial, Fraction] = {}
        for mon, coef in items:
            mon = tuple(int(e) for e in mon)
            if len(mon) != len(ctx):
                raise ContextError(f"단항식 길이 {len(mon)}가 컨텍스트 {ctx}와 맞지 않습니다.")
            if any(e < 0 for e in mon):
                raise ValueError(f"음수 지수는 허용되지 않습니다: {mon}")
            data[mon] = data.get(mon, Fraction(0)) + to_rational(coef)
        self._setup(ctx, order, {m: c for m, c in data.items() if c})

    def _setup(self, ctx: tuple, order: TermOrder, data: dict) -> None:
        self._context = ctx
        self._order = order
        self._dict = data
        self._terms = tuple(
            (data[m], m) for m in sorted(data, key=order.key, reverse=True)
        )
        self._hash = None
        self._float_eval = None

    @classmethod
    def _raw(cls, ctx: tuple, order: TermOrder, data: dict) -> "Polynomial":
        """정리된 dict(0 계수 없음)에서 직접 생성"""
        obj = cls.__new__(cls)
        obj._setup(ctx, order, data)
        return obj

    # ----------------------------------------------------------------- 생성자

    @classmethod
    def zero(cls, context: Sequence[str], order: TermOrder = LEX) -> "Polynomial":
        return cls._raw(tuple(context), order, {})

    @classmethod
    def constant(cls, context: Sequence[str], value: Scalar, order: TermOrder = LEX) -> "Polynomial":
        ctx = tuple(context)
        value = to_rational(value)
        return cls._raw(ctx, order, {(0,) * len(ctx): value} if value else {})

    @classmethod
    def variable(cls, context: Sequence[str], name: str, order: TermOrder = LEX) -> "Polynomial":
        ctx = tuple(context)
        if name not in ctx:
            raise ContextError(f"변수 {name}가 컨텍스트 {ctx}에 없습니다.")
        mon = tuple(1 if v == name else 0 for v in ctx)
        return cls._raw(ctx, order, {mon: Fraction(1)})

    @classmethod
    def from_dense(
        cls,
        coeffs: Sequence[Scalar],
        context: Sequence[str],
        var: str,
        order: TermOrder = LEX,
    ) -> "Polynomial":
        """오름차순 계수 목록 [a0, a1, ...]에서 var의 일변수 다항식 생성"""
        ctx = tuple(context)
        idx = ctx.index(var)
        data = {}
        for k, c in enumerate(coeffs):
            c = to_rational(c)
            if c:
                mon = [0] * len(ctx)
                mon[idx] = k
                data[tuple(mon)] = c
        return cls._raw(ctx, order, data)

    # ----------------------------------------------------------------- 속성

    @property
    def context(self) -> tuple[str, ...]:
        return self._context

    @property
    def order(self) -> TermOrder:
        return self._order

    @property
    def terms(self) -> tuple[tuple[Fraction, Monomial], ...]:
        return self._terms

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self._dict)

    def is_zero(self) -> bool:
        return not self._dict

    def __bool__(self) -> bool:
        return bool(self._dict)

    def __len__(self) -> int:
        return len(self._terms)

    def is_constant(self) -> bool:
        return not self._dict or (len(self._dict) == 1 and not any(self._terms[0][1]))

    def constant_value(self) -> Fraction:
        """상수 다항식의 값 (상수가 아니면 ValueError)"""
        if not self._dict:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"상수 다항식이 아닙니다: {self}")
        return self._terms[0][0]

    def constant_term(self) -> Fraction:
        return self._dict.get((0,) * len(self._context), Fraction(0))

    def total_degree(self) -> int:
        """전체 차수 (0 다항식은 -1)"""
        return max((sum(m) for m in self._dict), default=-1)

    def degree(self, var: str) -> int:
        """변수 var에 대한 차수 (0 다항식은 -1)"""
        idx = self._index(var)
        return max((m[idx] for m in self._dict), default=-1)

    def variables_used(self) -> tuple[str, ...]:
        used = [False] * len(self._context)
        for mon in self._dict:
            for i, e in enumerate(mon):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self._context, used) if u)

    def _index(self, var: str) -> int:
        try:
            return self._context.index(var)
        except ValueError:
            raise ContextError(f"변수 {var}가 컨텍스트 {self._context}에 없습니다.") from None

    # ----------------------------------------------------------------- 선행항

    def leading_term(self, order: Optional[TermOrder] = None) -> tuple[Fraction, Monomial]:
        """
        선행항 (계수, 단항식)

        Raises:
            ValueError: 0 다항식
        """
        if not self._dict:
            raise ValueError("0 다항식에는 선행항이 없습니다.")
        if order is None or order == self._order:
            return self._terms[0]
        mon = max(self._dict, key=order.key)
        return self._dict[mon], mon

    @property
    def leading_monomial(self) -> Monomial:
        return self.leading_term()[1]

    @property
    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[0]

    def monic(self) -> "Polynomial":
        if not self._dict:
            return self
        lc = self._terms[0][0]
        if lc == 1:
            return self
        return Polynomial._raw(self._context, self._order, {m: c / lc for m, c in self._dict.items()})

    def with_order(self, order: TermOrder) -> "Polynomial":
        """다른 항 순서로 재정렬"""
        if order == self._order:
            return self
        return Polynomial._raw(self._context, order, dict(self._dict))

    # ----------------------------------------------------------------- 산술

    def _coerce(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            if other._context != self._context:
                raise ContextError(
                    f"컨텍스트가 다릅니다: {self._context} vs {other._context}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(self._context, other, self._order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        data = dict(self._dict)
        for m, c in other._dict.items():
            v = data.get(m, 0) + c
            if v:
                data[m] = v
            else:
                data.pop(m, None)
        return Polynomial._raw(self._context, self._order, data)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self._context, self._order, {m: -c for m, c in self._dict.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        data: dict = {}
        for m1, c1 in self._dict.items():
            for m2, c2 in other._dict.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                data[m] = data.get(m, 0) + c1 * c2
        return Polynomial._raw(self._context, self._order, {m: c for m, c in data.items() if c})

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = to_rational(factor)
        if not factor:
            return Polynomial.zero(self._context, self._order)
        return Polynomial._raw(self._context, self._order, {m: c * factor for m, c in self._dict.items()})

    def __truediv__(self, other):
        """상수로 나누기만 지원"""
        if isinstance(other, Polynomial):
            other = other.constant_value() if other.is_constant() else None
            if other is None:
                return NotImplemented
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("0으로 나눌 수 없습니다.")
            return self.scale(Fraction(1) / to_rational(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("지수는 음이 아닌 정수여야 합니다.")
        result = Polynomial.constant(self._context, 1, self._order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def mul_term(self, coef: Scalar, mon: Monomial) -> "Polynomial":
        """단항 c·x^mon 곱"""
        coef = to_rational(coef)
        if not coef:
            return Polynomial.zero(self._context, self._order)
        return Polynomial._raw(
            self._context,
            self._order,
            {monomial_mul(m, mon): c * coef for m, c in self._dict.items()},
        )

    def exact_divide(self, divisor: "Polynomial") -> Optional["Polynomial"]:
        """
        단일 다항식으로 정확한 나눗셈

        단일 제수는 그 자체로 그뢰브너 기저이므로 나머지가 0일 때만 나누어떨어진다.

        Returns:
            몫 (나누어떨어지지 않으면 None)
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("0 다항식으로 나눌 수 없습니다.")
        divisor = divisor.with_order(self._order)
        lc_d, lm_d = divisor._terms[0]
        rest = self
        quotient: dict = {}
        while rest:
            lc, lm = rest._terms[0]
            if not monomial_divides(lm_d, lm):
                return None
            mon = monomial_div(lm, lm_d)
            coef = lc / lc_d
            quotient[mon] = quotient.get(mon, 0) + coef
            rest = rest - divisor.mul_term(coef, mon)
        return Polynomial._raw(self._context, self._order, {m: c for m, c in quotient.items() if c})

    # ----------------------------------------------------------------- 비교

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._context == other._context and self._dict == other._dict
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._context, frozenset(self._dict.items())))
        return self._hash

    # ----------------------------------------------------------------- 대입/미분

    def subs(self, mapping: Mapping[str, Union["Polynomial", Scalar]]) -> "Polynomial":
        """
        변수 대입 (같은 컨텍스트 유지)

        Args:
            mapping: {변수명: 다항식 또는 유리수}
        """
        images: list[Optional[Polynomial]] = []
        for var in self._context:
            if var in mapping:
                value = mapping[var]
                if isinstance(value, Polynomial):
                    images.append(self._coerce(value))
                else:
                    images.append(Polynomial.constant(self._context, to_rational(value), self._order))
            else:
                images.append(None)
        for name in mapping:
            self._index(name)

        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in powers:
                powers[key] = power(i, e - 1) * images[i] if e > 1 else images[i]
            return powers[key]

        result: dict = {}
        for mon, coef in self._dict.items():
            kept = tuple(0 if images[i] is not None else e for i, e in enumerate(mon))
            term = Polynomial._raw(self._context, self._order, {kept: coef})
            for i, e in enumerate(mon):
                if e and images[i] is not None:
                    term = term * power(i, e)
            for m, c in term._dict.items():
                result[m] = result.get(m, 0) + c
        return Polynomial._raw(self._context, self._order, {m: c for m, c in result.items() if c})

    def derivative(self, var: str) -> "Polynomial":
        """편미분"""
        idx = self._index(var)
        data = {}
        for mon, coef in self._dict.items():
            e = mon[idx]
            if e:
                new = list(mon)
                new[idx] = e - 1
                data[tuple(new)] = coef * e
        return Polynomial._raw(self._context, self._order, data)

    # ----------------------------------------------------------------- 평가

    def _values_vector(self, values) -> list:
        if isinstance(values, Mapping):
            missing = [v for v in self.variables_used() if v not in values]
            if missing:
                raise ContextError(f"값이 없는 변수: {missing}")
            return [values.get(v, 0) for v in self._context]
        values = list(values)
        if len(values) != len(self._context):
            raise ContextError(f"값 개수 {len(values)}가 컨텍스트 {self._context}와 맞지 않습니다.")
        return values

    def evaluate(self, values) -> Fraction:
        """모든 변수에 유리수를 대입한 정확한 값"""
        vec = [to_rational(v) for v in self._values_vector(values)]
        total = Fraction(0)
        for mon, coef in self._dict.items():
            term = coef
            for x, e in zip(vec, mon):
                if e:
                    term *= x ** e
            total += term
        return total

    def float_evaluator(self) -> Callable[[np.ndarray], float]:
        """부동소수 평가 함수 (지수 행렬과 계수 벡터를 미리 만들어 둠)"""
        if self._float_eval is None:
            if not self._dict:
                self._float_eval = lambda x: 0.0
            else:
                exps = np.array([m for m in self._dict], dtype=float)
                coefs = np.array([float(c) for c in self._dict.values()])

                def evaluate(x: np.ndarray) -> float:
                    return float(coefs @ np.prod(np.power(x, exps), axis=1))

                self._float_eval = evaluate
        return self._float_eval

    def evaluate_float(self, values) -> float:
        vec = np.asarray([float(v) for v in self._values_vector(values)], dtype=float)
        return self.float_evaluator()(vec)

    # ----------------------------------------------------------------- 컨텍스트

    def extend_context(self, context: Sequence[str], order: Optional[TermOrder] = None) -> "Polynomial":
        """더 큰(또는 재배열된) 컨텍스트로 옮기기"""
        return self._remap(tuple(context), order or self._order, strict=True)

    def restrict_context(self, context: Sequence[str], order: Optional[TermOrder] = None) -> "Polynomial":
        """
        작은 컨텍스트로 옮기기

        Raises:
            ContextError: 제거되는 변수가 실제로 등장할 때
        """
        return self._remap(tuple(context), order or self._order, strict=False)

    def _remap(self, ctx: tuple, order: TermOrder, strict: bool) -> "Polynomial":
        if strict:
            missing = [v for v in self._context if v not in ctx]
            if missing:
                raise ContextError(f"새 컨텍스트 {ctx}에 변수 {missing}가 없습니다.")
        used = set(self.variables_used())
        dropped = [v for v in self._context if v not in ctx]
        if used.intersection(dropped):
            raise ContextError(f"제거할 변수가 다항식에 등장합니다: {sorted(used.intersection(dropped))}")
        positions = {v: i for i, v in enumerate(ctx)}
        data = {}
        for mon, coef in self._dict.items():
            new = [0] * len(ctx)
            for var, e in zip(self._context, mon):
                if e:
                    new[positions[var]] = e
            data[tuple(new)] = coef
        return Polynomial._raw(ctx, order, data)

    def to_dense(self, var: Optional[str] = None) -> list[Fraction]:
        """
        일변수 다항식의 오름차순 계수 목록

        Args:
            var: 변수명 (None이면 등장하는 유일한 변수, 상수면 첫 변수)

        Raises:
            ContextError: 다른 변수가 등장할 때
        """
        used = self.variables_used()
        if var is None:
            if len(used) > 1:
                raise ContextError(f"일변수 다항식이 아닙니다: {used}")
            var = used[0] if used else (self._context[0] if self._context else None)
        if used and (len(used) > 1 or used[0] != var):
            raise ContextError(f"{var} 외의 변수가 등장합니다: {used}")
        if not self._dict:
            return []
        if var is None:
            return [self.constant_value()]
        idx = self._index(var)
        coeffs = [Fraction(0)] * (self.degree(var) + 1)
        for mon, coef in self._dict.items():
            coeffs[mon[idx]] = coef
        return coeffs

    # ----------------------------------------------------------------- 출력

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r}, context={self._context})"


def format_monomial(context: Sequence[str], mon: Monomial) -> str:
    parts = []
    for var, e in zip(context, mon):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    """정렬 순서대로 "-g*x*z - g*x + s*z + b + s" 형태 문자열"""
    if p.is_zero():
        return "0"
    pieces = []
    for i, (coef, mon) in enumerate(p.terms):
        body = format_monomial(p.context, mon)
        mag = abs(coef)
        if not body:
            text = rational_to_str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{rational_to_str(mag)}*{body}"
        if i == 0:
            pieces.append(f"-{text}" if coef < 0 else text)
        else:
            pieces.append(f" - {text}" if coef < 0 else f" + {text}")
    return "".join(pieces)
