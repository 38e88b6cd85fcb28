"""희소 다항식 테스트"""
from fractions import Fraction

import pytest
import sympy

from config.settings import VERIFICATION_DEFAULTS
from src.algebra.algebra_utils import make_rng, random_rational_vector
from src.algebra.polynomial import (
    SparsePolynomial,
    collapse,
    linear_derivation,
    symbols,
    to_fraction,
    univariate_exact_divide,
)


def _to_sympy(poly: SparsePolynomial):
    gens = sympy.symbols(poly.variables) if poly.variables else ()
    expr = sympy.Integer(0)
    for exps, coeff in poly.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for g, e in zip(gens, exps):
            term *= g ** e
        expr += term
    return sympy.expand(expr)


class TestToFraction:
    """정확한 유리수 변환 테스트"""

    def test_int_and_string(self):
        assert to_fraction(3) == Fraction(3)
        assert to_fraction("-2/6") == Fraction(-1, 3)

    def test_float_rejected(self):
        """부동소수점은 거부"""
        with pytest.raises(ValueError, match="정확한 유리수"):
            to_fraction(0.5)

    def test_bad_string(self):
        with pytest.raises(ValueError, match="유리수로 해석할 수 없는"):
            to_fraction("abc")


class TestConstruction:
    """생성과 정규화 테스트"""

    def test_zero_coefficients_dropped(self):
        p = SparsePolynomial(("x",), {(1,): 0, (2,): 3})
        assert len(p) == 1
        assert p.coefficient({"x": 2}) == 3

    def test_duplicate_variables(self):
        with pytest.raises(ValueError, match="중복"):
            SparsePolynomial(("x", "x"))

    def test_exponent_length_mismatch(self):
        with pytest.raises(ValueError, match="길이"):
            SparsePolynomial(("x", "y"), {(1,): 1})

    def test_negative_exponent(self):
        with pytest.raises(ValueError, match="음의 지수"):
            SparsePolynomial(("x",), {(-1,): 1})

    def test_total_degree_of_zero(self):
        assert SparsePolynomial.zero(("x",)).total_degree == -1


class TestArithmetic:
    """산술 연산 테스트"""

    def test_merged_variables(self):
        x, y = symbols("x y")
        p = (x + y) * (x - y)
        assert p == x ** 2 - y ** 2
        assert set(p.variables) == {"x", "y"}

    def test_scalar_operations(self):
        x, = symbols("x")
        assert 2 - x == -(x - 2)
        assert (3 * x) / 3 == x
        assert x * Fraction(1, 2) + x / 2 == x

    def test_division_by_zero(self):
        x, = symbols("x")
        with pytest.raises(ZeroDivisionError):
            x / 0

    def test_power_matches_sympy(self):
        x, y, z = symbols("x y z")
        p = (x + 2 * y - z / 3) ** 4
        sx, sy, sz = sympy.symbols("x y z")
        assert _to_sympy(p) == sympy.expand((sx + 2 * sy - sz / 3) ** 4)

    def test_negative_power(self):
        x, = symbols("x")
        with pytest.raises(ValueError, match="거듭제곱"):
            x ** -1

    def test_equality_ignores_variable_order(self):
        a = SparsePolynomial(("x", "y"), {(1, 2): 5})
        b = SparsePolynomial(("y", "x", "z"), {(2, 1, 0): 5})
        assert a == b

    def test_equality_with_scalar(self):
        assert SparsePolynomial.constant(4, ("x",)) == 4
        assert SparsePolynomial.zero() == 0


class TestCalculus:
    """미분, 대입, 평가 테스트"""

    def test_diff(self):
        x, y = symbols("x y")
        assert (x ** 3 * y + y).diff("x") == 3 * x ** 2 * y
        assert (x ** 3).diff("w").is_zero()

    def test_substitute(self):
        x, y, t = symbols("x y t")
        p = x ** 2 + y
        assert p.substitute({"x": t + 1, "y": 2}) == t ** 2 + 2 * t + 3

    def test_evaluate(self):
        x, y = symbols("x y")
        assert (x * y - y).evaluate({"x": Fraction(1, 2), "y": 4}) == -2

    def test_evaluate_is_ring_homomorphism(self):
        """무작위 100회: 합과 곱의 값 = 값의 합과 곱"""
        x, y, z = symbols("x y z")
        p = x ** 3 - Fraction(2, 3) * x * y * z + 4 * z ** 2 - 1
        q = Fraction(1, 2) * y ** 2 * x + z - 7 * x * z ** 3
        rng = make_rng(VERIFICATION_DEFAULTS["random_seed"])
        for _ in range(VERIFICATION_DEFAULTS["evaluation_trials"]):
            values = dict(zip("xyz", random_rational_vector(rng, 3)))
            vp, vq = p.evaluate(values), q.evaluate(values)
            assert (p + q).evaluate(values) == vp + vq
            assert (p * q).evaluate(values) == vp * vq
            assert (p - q).evaluate(values) == vp - vq

    def test_evaluate_missing(self):
        x, y = symbols("x y")
        with pytest.raises(ValueError, match="값이 주어지지"):
            (x + y).evaluate({"x": 1})

    def test_coefficient_of(self):
        x, y, a = symbols("x y a")
        p = a * x ** 2 + 3 * a ** 2 * x * y
        assert p.coefficient_of(("x", "y"), (2, 0)) == a
        assert p.coefficient_of(("x", "y"), (1, 1)) == 3 * a ** 2


class TestOrderingAndRatios:
    """정렬, 정규화, 비례 관계 테스트"""

    def test_leading_term_graded(self):
        x, y = symbols("x y")
        p = x + 5 * y ** 2
        assert p.leading_term() == ((0, 2), 5)
        assert p.monic() == y ** 2 + x / 5

    def test_ratio(self):
        x, y = symbols("x y")
        assert (6 * x - 4 * y).ratio_to(3 * x - 2 * y) == 2
        assert (x + y).ratio_to(x - y) is None
        assert not (x + y).is_proportional_to(SparsePolynomial.zero())

    def test_homogeneous_components(self):
        x, y = symbols("x y")
        parts = (x + x * y + 1).homogeneous_components()
        assert sorted(parts) == [0, 1, 2]
        assert not (x + x * y).is_homogeneous()

    def test_str(self):
        x, y = symbols("x y")
        assert str(x ** 2 - 3 * y + 1) == "x^2 - 3*y + 1"
        assert str(SparsePolynomial.zero()) == "0"


class TestHelpers:
    """보조 함수 테스트"""

    def test_exact_divide(self):
        x, = symbols("x")
        assert univariate_exact_divide(1 - x ** 4, 1 - x) == 1 + x + x ** 2 + x ** 3

    def test_inexact_divide(self):
        x, = symbols("x")
        with pytest.raises(ValueError, match="나머지"):
            univariate_exact_divide(1 + x ** 2, 1 - x)

    def test_multivariate_divide(self):
        x, y = symbols("x y")
        with pytest.raises(ValueError, match="일변수"):
            univariate_exact_divide(x * y, x)

    def test_linear_derivation(self):
        """a1 ∂/∂a0 를 a0² 에 적용하면 2 a0 a1"""
        a0, a1 = symbols("a0 a1")
        result = linear_derivation(a0 ** 2, ("a0", "a1"), [(0, 1, 1)])
        assert result == 2 * a0 * a1

    def test_linear_derivation_foreign_variable(self):
        b, = symbols("b")
        with pytest.raises(ValueError, match="허용되지 않은 변수"):
            linear_derivation(b, ("a0", "a1"), [(0, 1, 1)])

    def test_collapse(self):
        x, = symbols("x")
        assert collapse(SparsePolynomial.constant(7, ("x",))) == Fraction(7)
        assert collapse(x) == x
