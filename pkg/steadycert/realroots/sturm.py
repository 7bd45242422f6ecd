"""
Sturm 열 기반 실근 개수 세기, 분리, 정밀화

- count_roots: (a, b] 안의 서로 다른 실근 개수 V(a) − V(b)
- isolate_roots: 이분법 + Sturm 개수로 근마다 하나의 구간
- refine: 부호 변화 이분법으로 폭 eps 이하까지
- sign_at_root: 다른 다항식 q의 근에서의 정확한 부호
모든 이분점은 분모가 2의 거듭제곱인 유리수다.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from steadycert.exactalg.polynomial import Polynomial
from steadycert.exactalg.rational import power_of_two_ceiling, sign
from steadycert.realroots import univariate as uv
from steadycert.realroots.univariate import Dense

logger = logging.getLogger(__name__)

PolyLike = Union[Polynomial, Sequence]


@dataclass(frozen=True)
class IsolatingInterval:
    """정확히 하나의 실근을 담는 구간 (lo = hi 이면 정확한 유리근)"""
    lo: Fraction
    hi: Fraction
    squarefree: bool = True

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"잘못된 구간: ({self.lo}, {self.hi})")

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        if self.is_exact:
            return x == self.lo
        return self.lo < x < self.hi

    def to_float(self) -> float:
        return float(self.midpoint)

    def to_dict(self) -> dict:
        return {
            "lo": f"{self.lo.numerator}/{self.lo.denominator}",
            "hi": f"{self.hi.numerator}/{self.hi.denominator}",
            "approx": self.to_float(),
            "exact": self.is_exact,
        }


def _sturm_dense(p: Dense) -> list[Dense]:
    chain = [p]
    if len(p) <= 1:
        return chain
    chain.append(uv.derivative(p))
    while True:
        rem = uv.divmod_dense(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def sturm_sequence(p: PolyLike) -> list:
    """
    표준 Sturm 열 p, p′, −rem(...), ...

    Polynomial을 넣으면 같은 컨텍스트의 Polynomial 목록을 돌려준다.
    """
    if isinstance(p, Polynomial):
        if p.is_zero():
            raise ValueError("0 다항식의 Sturm 열은 정의되지 않습니다.")
        used = p.variables_used()
        var = used[0] if used else p.context[0]
        chain = _sturm_dense(uv.as_dense(p))
        return [Polynomial.from_dense(c, p.context, var, p.order) for c in chain]
    dense = uv.as_dense(p)
    if not dense:
        raise ValueError("0 다항식의 Sturm 열은 정의되지 않습니다.")
    return _sturm_dense(dense)


def sign_variations(chain: Sequence[Dense], x) -> int:
    """x에서의 부호 변화 수 (0은 건너뜀)"""
    count = 0
    last = 0
    for p in chain:
        s = sign(uv.evaluate(p, x))
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def root_bound(p: PolyLike) -> Fraction:
    """모든 실근의 절댓값보다 큰 2의 거듭제곱 (Cauchy 상계)"""
    dense = uv.as_dense(p)
    if len(dense) <= 1:
        return Fraction(1)
    lead = abs(dense[-1])
    bound = 1 + max(abs(c) / lead for c in dense[:-1])
    return power_of_two_ceiling(bound + 1)


def count_roots(p: PolyLike, interval: tuple) -> int:
    """
    (a, b] 안의 서로 다른 실근 개수

    p는 먼저 제곱인수 없는 부분으로 바꾼다.
    """
    a, b = Fraction(interval[0]), Fraction(interval[1])
    if a > b:
        raise ValueError(f"a < b 이어야 합니다: ({a}, {b}]")
    sf = uv.squarefree_part(uv.as_dense(p))
    if len(sf) <= 1 or a == b:
        return 0
    chain = _sturm_dense(sf)
    return sign_variations(chain, a) - sign_variations(chain, b)


def isolate_roots(p: PolyLike, domain: Optional[tuple] = None) -> list[IsolatingInterval]:
    """
    실근 분리

    Args:
        p: 0이 아닌 일변수 다항식
        domain: (a, b) 이면 (a, b] 안의 근, None이면 모든 실근

    Returns:
        lo 오름차순, 서로소인 분리 구간 목록
    """
    dense = uv.as_dense(p)
    if not dense:
        raise ValueError("0 다항식의 근은 분리할 수 없습니다.")
    sf = uv.squarefree_part(dense)
    if len(sf) <= 1:
        return []
    chain = _sturm_dense(sf)
    if domain is None:
        bound = root_bound(sf)
        lo, hi = -bound, bound
    else:
        lo, hi = Fraction(domain[0]), Fraction(domain[1])

    def count(a: Fraction, b: Fraction) -> int:
        return sign_variations(chain, a) - sign_variations(chain, b)

    result: list[IsolatingInterval] = []

    def split(a: Fraction, b: Fraction, n: int) -> None:
        if n == 0:
            return
        if n == 1:
            fb = uv.evaluate(sf, b)
            if fb == 0:
                result.append(IsolatingInterval(b, b))
                return
            if uv.evaluate(sf, a) != 0:
                result.append(IsolatingInterval(a, b))
                return
        mid = (a + b) / 2
        left = count(a, mid)
        split(a, mid, left)
        split(mid, b, n - left)

    split(lo, hi, count(lo, hi))
    result.sort(key=lambda iv: iv.lo)
    logger.debug("isolate_roots: 차수 %d, 근 %d개", len(sf) - 1, len(result))
    return result


def refine(iv: IsolatingInterval, p: PolyLike, eps) -> IsolatingInterval:
    """
    폭이 eps 이하가 될 때까지 이분 (같은 근 유지, 원래 구간의 부분구간)
    """
    eps = Fraction(eps)
    if iv.is_exact or iv.width <= eps:
        return iv
    sf = uv.squarefree_part(uv.as_dense(p))
    lo, hi = iv.lo, iv.hi
    s_lo = sign(uv.evaluate(sf, lo))
    while hi - lo > eps:
        mid = (lo + hi) / 2
        s_mid = sign(uv.evaluate(sf, mid))
        if s_mid == 0:
            return IsolatingInterval(mid, mid)
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return IsolatingInterval(lo, hi)


def sign_at_root(q: PolyLike, p: PolyLike, iv: IsolatingInterval) -> int:
    """
    p의 분리 구간 iv 안의 근 r에서 q(r)의 정확한 부호

    q와 p가 그 근을 공유하면 0 (gcd로 판정), 아니면 q가 구간에서
    근이 없어질 때까지 정밀화한 뒤 끝점 부호를 읽는다.
    """
    qd = uv.as_dense(q)
    if not qd:
        return 0
    if len(qd) == 1:
        return sign(qd[0])
    if iv.is_exact:
        return sign(uv.evaluate(qd, iv.lo))
    sf = uv.squarefree_part(uv.as_dense(p))
    common = uv.gcd(sf, qd)
    if len(common) > 1 and count_roots(common, (iv.lo, iv.hi)) > 0:
        return 0
    current = iv
    while True:
        low, high = uv.evaluate_interval(qd, current.lo, current.hi)
        if low > 0:
            return 1
        if high < 0:
            return -1
        if count_roots(qd, (current.lo, current.hi)) == 0:
            return sign(uv.evaluate(qd, current.hi))
        current = refine(current, sf, current.width / 2)
        if current.is_exact:
            return sign(uv.evaluate(qd, current.lo))
