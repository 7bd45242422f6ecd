"""
실대수적 점 (algebraic point)

하나의 제곱인수 없는 정의다항식 q(t)의 분리된 실근 r과
좌표 사상 φ_i(t)로 점 (φ_1(r), ..., φ_n(r))을 표현한다.
대칭 정상상태 (c, c, ..., c) 나 Goodwin 형태 (t, k·t, k'·t)는 φ_i가 일차식인 경우다.
임의의 다항식 P에 대해 P(φ(r))의 부호를 정확히 판정할 수 있다.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

import numpy as np

from steadycert.errors import ContextError
from steadycert.exactalg.polynomial import Polynomial
from steadycert.realroots import univariate as uv
from steadycert.realroots.sturm import IsolatingInterval, isolate_roots, refine, sign_at_root


@dataclass(frozen=True)
class AlgebraicPoint:
    """정의다항식의 근 하나와 그 위의 좌표 사상"""
    defining: tuple[Fraction, ...]
    interval: IsolatingInterval
    coordinates: tuple[tuple[Fraction, ...], ...]
    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.coordinates) != len(self.names):
            raise ContextError("좌표 사상 개수가 변수 이름 개수와 다릅니다.")

    @classmethod
    def ray(
        cls,
        defining: Sequence,
        interval: IsolatingInterval,
        scales: Sequence,
        names: Sequence[str],
    ) -> "AlgebraicPoint":
        """좌표가 scale_i · t 인 점"""
        sf = uv.squarefree_part(uv.as_dense(defining))
        coords = tuple(tuple(uv.strip([0, Fraction(k)])) for k in scales)
        return cls(tuple(sf), interval, coords, tuple(names))

    @classmethod
    def roots_of(
        cls,
        defining: Sequence,
        scales: Sequence,
        names: Sequence[str],
        domain: tuple | None = None,
    ) -> list["AlgebraicPoint"]:
        """정의다항식의 모든 (또는 domain 안의) 실근마다 하나의 점"""
        return [cls.ray(defining, iv, scales, names) for iv in isolate_roots(defining, domain)]

    @property
    def dimension(self) -> int:
        return len(self.names)

    def _image(self, poly: Polynomial) -> list[Fraction]:
        if poly.context != self.names:
            poly = poly.restrict_context(self.names)
        return uv.from_polynomial_images(poly, [list(c) for c in self.coordinates])

    def sign_of(self, poly: Polynomial) -> int:
        """P(점)의 정확한 부호 (−1, 0, 1)"""
        return sign_at_root(self._image(poly), list(self.defining), self.interval)

    def vanishes(self, poly: Polynomial) -> bool:
        return self.sign_of(poly) == 0

    def coordinate_signs(self) -> list[int]:
        return [sign_at_root(list(c), list(self.defining), self.interval) for c in self.coordinates]

    def is_positive(self) -> bool:
        return all(s > 0 for s in self.coordinate_signs())

    def refined(self, eps) -> "AlgebraicPoint":
        return replace(self, interval=refine(self.interval, list(self.defining), eps))

    def root_approx(self, eps: float = 1e-15) -> float:
        iv = self.interval
        if not iv.is_exact:
            width = max(abs(iv.lo), abs(iv.hi), Fraction(1)) * Fraction(eps)
            iv = refine(iv, list(self.defining), width)
        return float(iv.midpoint)

    def approx(self, eps: float = 1e-15) -> np.ndarray:
        """부동소수 좌표"""
        t = self.root_approx(eps)
        return np.array([uv.evaluate_float(list(c), t) for c in self.coordinates])

    def to_dict(self) -> dict:
        return {
            "defining": [f"{c.numerator}/{c.denominator}" for c in self.defining],
            "interval": self.interval.to_dict(),
            "coordinates": dict(zip(self.names, (float(v) for v in self.approx()))),
        }
