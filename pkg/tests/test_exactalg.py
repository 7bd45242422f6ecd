"""
정확한 대수 커널 테스트
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from steadycert.errors import ContextError, ModelDomainError
from steadycert.exactalg import (
    DEGREVLEX,
    LEX,
    Polynomial,
    RationalFunction,
    berkowitz,
    determinant,
    parse_order,
    parse_polynomial,
    polynomial_from_json,
    polynomial_to_json,
    to_rational,
)
from steadycert.exactalg.polynomial import format_polynomial

XY = ("x", "y")

monomials = st.tuples(st.integers(0, 3), st.integers(0, 3))
polynomials = st.dictionaries(monomials, st.integers(-5, 5), max_size=5).map(
    lambda terms: Polynomial(XY, terms)
)


class TestRational:
    """유리수 변환"""

    def test_decimal_string_is_exact(self):
        assert to_rational("0.3") == Fraction(3, 10)
        assert to_rational("1e-3") == Fraction(1, 1000)

    def test_fraction_string(self):
        assert to_rational("3/10") == Fraction(3, 10)

    def test_float_uses_decimal_repr(self):
        assert to_rational(0.1) == Fraction(1, 10)

    @pytest.mark.parametrize("bad", ["", "abc", "1/0", True, float("nan")])
    def test_rejects_invalid(self, bad):
        with pytest.raises(ValueError):
            to_rational(bad)


class TestPolynomial:
    """다항식 산술"""

    def test_parse_matches_arithmetic(self):
        x = Polynomial.variable(XY, "x")
        y = Polynomial.variable(XY, "y")
        assert parse_polynomial("(x + y)^2", XY) == x * x + 2 * x * y + y * y

    def test_rational_coefficients(self):
        p = parse_polynomial("3/10*x - 1/2", XY)
        assert p.evaluate({"x": 10, "y": 0}) == Fraction(5, 2)

    def test_printer_round_trip(self):
        p = parse_polynomial("-3/7*x^2*y + x*y^3 - 5 + y", XY)
        assert parse_polynomial(format_polynomial(p), XY) == p

    def test_zero_prints_as_zero(self):
        assert format_polynomial(Polynomial.zero(XY)) == "0"

    def test_context_mismatch(self):
        p = Polynomial.variable(XY, "x")
        q = Polynomial.variable(("x", "z"), "x")
        with pytest.raises(ContextError):
            p + q

    def test_unknown_variable(self):
        with pytest.raises(ContextError):
            parse_polynomial("x + w", XY)

    def test_derivative_and_subs(self):
        p = parse_polynomial("x^3*y + 2*x", XY)
        assert p.derivative("x") == parse_polynomial("3*x^2*y + 2", XY)
        assert p.subs({"y": 2}) == parse_polynomial("2*x^3 + 2*x", XY)

    def test_leading_term_depends_on_order(self):
        p = parse_polynomial("x + y^2", XY)
        assert p.leading_term(LEX)[1] == (1, 0)
        assert p.leading_term(DEGREVLEX)[1] == (0, 2)

    def test_dense_conversion(self):
        p = parse_polynomial("2*x^2 - 3", XY)
        assert p.to_dense("x") == [Fraction(-3), Fraction(0), Fraction(2)]
        assert Polynomial.from_dense([-3, 0, 2], XY, "x") == p

    def test_exact_divide(self):
        p = parse_polynomial("x^2 - y^2", XY)
        q = parse_polynomial("x - y", XY)
        assert p.exact_divide(q) == parse_polynomial("x + y", XY)
        assert parse_polynomial("x^2 + 1", XY).exact_divide(q) is None

    def test_parse_order(self):
        assert parse_order("lex") == LEX
        assert parse_order("grevlex") == DEGREVLEX
        with pytest.raises(ValueError):
            parse_order("weird")

    @given(polynomials, polynomials, polynomials)
    def test_ring_axioms(self, p, q, r):
        assert p + q == q + p
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        assert (p - p).is_zero()

    @given(polynomials, st.integers(-3, 3), st.integers(-3, 3))
    def test_evaluation_is_a_homomorphism(self, p, a, b):
        values = {"x": a, "y": b}
        assert (p * p).evaluate(values) == p.evaluate(values) ** 2


class TestRationalFunction:
    """유리함수"""

    def test_derivative(self):
        ctx = ("b", "z")
        f = RationalFunction.parse("b", "1 + z", ctx)
        expected = RationalFunction.parse("-b", "(1 + z)^2", ctx)
        assert f.derivative("z") == expected

    def test_cancellation(self):
        ctx = ("x",)
        f = RationalFunction.parse("x^2 - 1", "x + 1", ctx)
        assert f.is_polynomial()
        assert f == RationalFunction(parse_polynomial("x - 1", ctx))

    def test_zero_denominator(self):
        f = RationalFunction.parse("1", "1 + x", ("x",))
        with pytest.raises(ModelDomainError):
            f.evaluate({"x": -1})

    def test_float_matches_exact(self):
        f = RationalFunction.parse("3*x + 1", "x^2 + 2", ("x",))
        assert f.evaluate_float([0.5]) == pytest.approx(float(f.evaluate([Fraction(1, 2)])))


class TestLinearAlgebra:
    """Berkowitz 특성다항식"""

    def test_char_poly_2x2(self):
        m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(2)]]
        assert berkowitz(m) == [1, -4, 3]
        assert determinant(m) == 3

    def test_determinant_3x3(self):
        m = [[Fraction(v) for v in row] for row in ([2, 0, 1], [1, 3, 2], [1, 1, 1])]
        # 2(3 − 2) − 0 + 1(1 − 3)
        assert determinant(m) == 0

    def test_non_square(self):
        with pytest.raises(ValueError):
            berkowitz([[1, 2]])


class TestCodec:
    """다항식 JSON"""

    def test_terms_encoding(self):
        p = parse_polynomial("3/10*x^2 - y", XY)
        data = polynomial_to_json(p)
        assert data["vars"] == ["x", "y"]
        assert {"c": "3/10", "e": [2, 0]} in data["terms"]
        assert polynomial_from_json(data) == p

    def test_expr_encoding(self):
        p = polynomial_from_json({"vars": ["x", "y"], "expr": "x*y - 1"})
        assert p == parse_polynomial("x*y - 1", XY)

    def test_vars_mismatch(self):
        with pytest.raises(ContextError):
            polynomial_from_json({"vars": ["y", "x"], "expr": "x"}, context=XY)
