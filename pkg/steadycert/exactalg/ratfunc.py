"""
유리함수 (분자 다항식 / 알려진 분모 인수들의 곱)

분모는 모닉 비상수 다항식 인수(atom)와 그 거듭제곱의 곱으로만 표현한다.
약분은 분자를 각 인수로 정확히 나누는 방식으로만 수행한다.
(다변수 GCD는 구현하지 않는다.)
모델 우변, 기호 야코비안, 특성다항식 계수, Hurwitz 행렬식에 사용한다.
"""

from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from steadycert.errors import ContextError, ModelDomainError
from steadycert.exactalg.monomial import LEX, TermOrder
from steadycert.exactalg.parser import parse_polynomial
from steadycert.exactalg.polynomial import Polynomial, Scalar
from steadycert.exactalg.rational import to_rational


class RationalFunction:
    """N / Π atom^k"""

    __slots__ = ("_num", "_factors")

    def __init__(self, numerator: Polynomial, factors: Optional[Mapping[Polynomial, int]] = None):
        """
        Args:
            numerator: 분자
            factors: {모닉 분모 인수: 거듭제곱}
        """
        self._num = numerator
        clean = {}
        for atom, power in (factors or {}).items():
            if power <= 0:
                continue
            if atom.context != numerator.context:
                raise ContextError("분모 인수의 컨텍스트가 분자와 다릅니다.")
            if atom.is_constant():
                raise ValueError("분모 인수는 상수가 아니어야 합니다.")
            if atom.leading_coefficient != 1:
                raise ValueError("분모 인수는 모닉이어야 합니다.")
            clean[atom] = clean.get(atom, 0) + power
        self._factors = clean
        self._cancel()

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "RationalFunction":
        return cls(p)

    @classmethod
    def from_fraction(cls, numerator: Polynomial, denominator: Polynomial) -> "RationalFunction":
        """N / D (D는 하나의 인수로 취급)"""
        return cls(numerator).divide_by(denominator)

    @classmethod
    def parse(
        cls,
        numerator: str,
        denominator: str,
        context: Sequence[str],
        order: TermOrder = LEX,
    ) -> "RationalFunction":
        num = parse_polynomial(numerator, context, order)
        den = parse_polynomial(denominator, context, order)
        return cls.from_fraction(num, den)

    # ----------------------------------------------------------------- 속성

    @property
    def numerator(self) -> Polynomial:
        return self._num

    @property
    def factors(self) -> dict[Polynomial, int]:
        return dict(self._factors)

    @property
    def context(self) -> tuple[str, ...]:
        return self._num.context

    def denominator(self) -> Polynomial:
        """분모 다항식 (인수들의 곱)"""
        result = Polynomial.constant(self.context, 1, self._num.order)
        for atom, power in self._factors.items():
            result = result * atom ** power
        return result

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_polynomial(self) -> bool:
        return not self._factors

    # ----------------------------------------------------------------- 내부

    def _cancel(self) -> None:
        if self._num.is_zero():
            self._factors = {}
            return
        for atom in list(self._factors):
            power = self._factors[atom]
            while power:
                quotient = self._num.exact_divide(atom)
                if quotient is None:
                    break
                self._num = quotient
                power -= 1
            if power:
                self._factors[atom] = power
            else:
                del self._factors[atom]

    def _coerce(self, other) -> Optional["RationalFunction"]:
        if isinstance(other, RationalFunction):
            if other.context != self.context:
                raise ContextError("컨텍스트가 다릅니다.")
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalFunction(Polynomial.constant(self.context, other, self._num.order))
        return None

    @staticmethod
    def _multiplier(own: dict, common: dict, template: Polynomial) -> Polynomial:
        result = Polynomial.constant(template.context, 1, template.order)
        for atom, power in common.items():
            extra = power - own.get(atom, 0)
            if extra:
                result = result * atom ** extra
        return result

    # ----------------------------------------------------------------- 산술

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        common = dict(self._factors)
        for atom, power in other._factors.items():
            common[atom] = max(common.get(atom, 0), power)
        num = (
            self._num * self._multiplier(self._factors, common, self._num)
            + other._num * self._multiplier(other._factors, common, self._num)
        )
        return RationalFunction(num, common)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self._num, self._factors)

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
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        factors = dict(self._factors)
        for atom, power in other._factors.items():
            factors[atom] = factors.get(atom, 0) + power
        return RationalFunction(self._num * other._num, factors)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RationalFunction":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("지수는 음이 아닌 정수여야 합니다.")
        return RationalFunction(
            self._num ** exponent, {a: p * exponent for a, p in self._factors.items()}
        )

    def divide_by(self, divisor: Union[Polynomial, Scalar], power: int = 1) -> "RationalFunction":
        """
        다항식으로 나누기 (divisor^power)

        Raises:
            ModelDomainError: 0으로 나눌 때
        """
        if not isinstance(divisor, Polynomial):
            divisor = Polynomial.constant(self.context, to_rational(divisor), self._num.order)
        if divisor.context != self.context:
            raise ContextError("컨텍스트가 다릅니다.")
        if divisor.is_zero():
            raise ModelDomainError("0으로 나눌 수 없습니다.")
        if divisor.is_constant():
            return RationalFunction(self._num.scale(Fraction(1) / divisor.constant_value() ** power), self._factors)
        lc = divisor.leading_coefficient
        atom = divisor.monic()
        factors = dict(self._factors)
        factors[atom] = factors.get(atom, 0) + power
        return RationalFunction(self._num.scale(Fraction(1) / lc ** power), factors)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    # ----------------------------------------------------------------- 미분/대입

    def derivative(self, var: str) -> "RationalFunction":
        """몫의 미분법: (N'·Πa − N·Σ k·a'·Π_{j≠i} a_j) / (D·Πa)"""
        atoms = list(self._factors)
        if not atoms:
            return RationalFunction(self._num.derivative(var))
        product = Polynomial.constant(self.context, 1, self._num.order)
        for atom in atoms:
            product = product * atom
        num = self._num.derivative(var) * product
        for i, atom in enumerate(atoms):
            d_atom = atom.derivative(var)
            if d_atom.is_zero():
                continue
            others = Polynomial.constant(self.context, self._factors[atom], self._num.order)
            for j, other in enumerate(atoms):
                if j != i:
                    others = others * other
            num = num - self._num * d_atom * others
        factors = {atom: power + 1 for atom, power in self._factors.items()}
        return RationalFunction(num, factors)

    def subs(self, mapping: Mapping[str, Union[Polynomial, Scalar]]) -> "RationalFunction":
        """변수 대입 (분모가 상수가 되면 분자로 흡수)"""
        result = RationalFunction(self._num.subs(mapping))
        for atom, power in self._factors.items():
            result = result.divide_by(atom.subs(mapping), power)
        return result

    def restrict_context(self, context: Sequence[str], order: Optional[TermOrder] = None) -> "RationalFunction":
        return RationalFunction(
            self._num.restrict_context(context, order),
            {a.restrict_context(context, order): p for a, p in self._factors.items()},
        )

    def extend_context(self, context: Sequence[str], order: Optional[TermOrder] = None) -> "RationalFunction":
        return RationalFunction(
            self._num.extend_context(context, order),
            {a.extend_context(context, order): p for a, p in self._factors.items()},
        )

    def sign_factors(self) -> list[tuple[Polynomial, int]]:
        """부호 판정용 (다항식, 거듭제곱) 목록: 분자와 각 분모 인수"""
        return [(self._num, 1)] + list(self._factors.items())

    # ----------------------------------------------------------------- 평가

    def evaluate(self, values) -> Fraction:
        """
        정확한 값

        Raises:
            ModelDomainError: 분모가 0일 때
        """
        den = Fraction(1)
        for atom, power in self._factors.items():
            value = atom.evaluate(values)
            if value == 0:
                raise ModelDomainError(f"분모 {atom}가 0이 됩니다.")
            den *= value ** power
        return self._num.evaluate(values) / den

    def evaluate_float(self, values) -> float:
        """부동소수 값 (목록이면 컨텍스트 순서)"""
        if isinstance(values, Mapping):
            values = [values.get(v, 0.0) for v in self.context]
        vec = np.asarray(values, dtype=float)
        den = 1.0
        for atom, power in self._factors.items():
            value = atom.float_evaluator()(vec)
            if value == 0.0:
                raise ModelDomainError(f"분모 {atom}가 0이 됩니다.")
            den *= value ** power
        return self._num.float_evaluator()(vec) / den

    def __str__(self) -> str:
        if not self._factors:
            return f"{self._num}"
        den = "*".join(
            f"({atom})" if power == 1 else f"({atom})^{power}"
            for atom, power in sorted(self._factors.items(), key=lambda item: str(item[0]))
        )
        return f"({self._num})/({den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"
