"""
그뢰브너 기저 모듈

- normal_form, s_polynomial: 다변수 나눗셈
- buchberger, reduce_basis: 그뢰브너 기저
- Ideal, member, eliminate, intersect, quotient, radical_member: 이데알 연산
"""

from steadycert.groebner.division import normal_form, reduce, s_polynomial
from steadycert.groebner.buchberger import (
    Budget,
    GroebnerBasis,
    buchberger,
    groebner_basis,
    reduce_basis,
)
from steadycert.groebner.ideals import (
    Ideal,
    eliminate,
    intersect,
    member,
    quotient,
    radical_member,
)

__all__ = [
    "Budget",
    "GroebnerBasis",
    "Ideal",
    "buchberger",
    "eliminate",
    "groebner_basis",
    "intersect",
    "member",
    "normal_form",
    "quotient",
    "radical_member",
    "reduce",
    "reduce_basis",
    "s_polynomial",
]
