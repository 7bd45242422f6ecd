"""
실근 분리와 대수적 점 테스트
"""

import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from steadycert.exactalg import parse_polynomial
from steadycert.realroots import (
    AlgebraicPoint,
    IsolatingInterval,
    count_roots,
    isolate_roots,
    refine,
    root_bound,
    sign_at_root,
    sturm_sequence,
)
from steadycert.realroots import univariate as uv

SQRT2 = [Fraction(-2), Fraction(0), Fraction(1)]

dense_polys = st.lists(st.integers(-6, 6), min_size=2, max_size=6).filter(lambda c: c[-1] != 0)


class TestUnivariate:
    """조밀 일변수 연산"""

    def test_divmod(self):
        quot, rem = uv.divmod_dense([Fraction(-1), 0, 0, 1], [Fraction(-1), 1])
        assert quot == [1, 1, 1]
        assert rem == []

    def test_gcd_and_squarefree(self):
        # (t − 1)²(t + 2)
        p = uv.mul(uv.power([Fraction(-1), Fraction(1)], 2), [Fraction(2), Fraction(1)])
        assert uv.gcd(p, uv.derivative(p)) == [-1, 1]
        assert uv.squarefree_part(p) == [-2, 1, 1]

    def test_compose(self):
        # (t²)∘(t + 1) = t² + 2t + 1
        assert uv.compose([0, 0, Fraction(1)], [Fraction(1), Fraction(1)]) == [1, 2, 1]

    @given(dense_polys, st.fractions(min_value=-3, max_value=3), st.fractions(min_value=0, max_value=1))
    def test_interval_evaluation_encloses(self, coeffs, lo, width):
        p = uv.strip(coeffs)
        hi = lo + width
        low, high = uv.evaluate_interval(p, lo, hi)
        for x in (lo, (lo + hi) / 2, hi):
            assert low <= uv.evaluate(p, x) <= high


class TestSturm:
    """Sturm 개수와 분리"""

    def test_sturm_sequence_of_polynomial(self):
        p = parse_polynomial("t^3 - t", ("t",))
        chain = sturm_sequence(p)
        assert chain[0] == p
        assert chain[1] == parse_polynomial("3*t^2 - 1", ("t",))

    def test_count_roots(self):
        assert count_roots(SQRT2, (0, 2)) == 1
        assert count_roots(SQRT2, (-2, 2)) == 2
        assert count_roots(SQRT2, (2, 2)) == 0

    def test_isolate_sqrt2(self):
        intervals = isolate_roots(SQRT2)
        assert len(intervals) == 2
        assert intervals[0].lo < -math.sqrt(2) < intervals[0].hi
        assert intervals[1].lo < math.sqrt(2) < intervals[1].hi
        assert intervals[0].hi <= intervals[1].lo

    def test_exact_rational_roots(self):
        intervals = isolate_roots([Fraction(0), Fraction(-1), Fraction(1)])
        assert [(iv.lo, iv.hi) for iv in intervals] == [(0, 0), (1, 1)]
        assert all(iv.is_exact for iv in intervals)

    def test_repeated_root_counted_once(self):
        p = uv.mul(uv.power([Fraction(-1), Fraction(1)], 2), [Fraction(2), Fraction(1)])
        assert len(isolate_roots(p)) == 2

    def test_domain_restriction(self):
        assert len(isolate_roots(SQRT2, (0, 4))) == 1

    def test_zero_polynomial(self):
        with pytest.raises(ValueError):
            isolate_roots([])

    def test_refine(self):
        iv = isolate_roots(SQRT2, (0, 4))[0]
        narrow = refine(iv, SQRT2, Fraction(1, 10**12))
        assert narrow.width <= Fraction(1, 10**12)
        assert narrow.lo < math.sqrt(2) + 1e-12 and narrow.hi > math.sqrt(2) - 1e-12
        assert iv.lo <= narrow.lo and narrow.hi <= iv.hi

    def test_sign_at_root(self):
        negative, positive = isolate_roots(SQRT2)
        t_minus_1 = [Fraction(-1), Fraction(1)]
        assert sign_at_root(t_minus_1, SQRT2, positive) == 1
        assert sign_at_root(t_minus_1, SQRT2, negative) == -1
        # t⁴ − 4 = (t² − 2)(t² + 2) 는 근을 공유한다
        assert sign_at_root([Fraction(-4), 0, 0, 0, Fraction(1)], SQRT2, positive) == 0
        assert sign_at_root([Fraction(3)], SQRT2, negative) == 1

    def test_invalid_interval(self):
        with pytest.raises(ValueError):
            IsolatingInterval(Fraction(1), Fraction(0))

    @given(dense_polys)
    def test_count_matches_sympy(self, coeffs):
        t = sympy.symbols("t")
        reference = sympy.Poly(list(reversed(coeffs)), t).sqf_part().count_roots()
        assert len(isolate_roots([Fraction(c) for c in coeffs])) == reference

    @given(dense_polys)
    def test_roots_inside_bound(self, coeffs):
        p = uv.strip(coeffs)
        assume(len(p) > 1)
        bound = root_bound(p)
        for iv in isolate_roots(p):
            assert -bound <= iv.lo and iv.hi <= bound


class TestAlgebraicPoint:
    """대수적 점"""

    def test_ray_point_signs(self):
        # 2t² + t − 6 = (2t − 3)(t + 2): 양의 근 3/2
        defining = [Fraction(-6), Fraction(1), Fraction(2)]
        points = AlgebraicPoint.roots_of(defining, [1, 2], ("x", "y"))
        assert len(points) == 2
        negative, positive = points
        assert positive.is_positive()
        assert not negative.is_positive()
        assert positive.approx() == pytest.approx([1.5, 3.0])

    def test_exact_sign_of_polynomial(self):
        point = AlgebraicPoint.roots_of(SQRT2, [1, 1], ("x", "y"), domain=(0, 4))[0]
        ctx = ("x", "y")
        assert point.vanishes(parse_polynomial("x*y - 2", ctx))
        assert point.sign_of(parse_polynomial("x - y + 1", ctx)) == 1
        assert point.sign_of(parse_polynomial("x^2 - 3", ctx)) == -1

    def test_to_dict(self):
        point = AlgebraicPoint.roots_of(SQRT2, [1], ("x",), domain=(0, 4))[0]
        data = point.to_dict()
        assert data["coordinates"]["x"] == pytest.approx(math.sqrt(2))
        assert data["defining"] == ["-2/1", "0/1", "1/1"]
