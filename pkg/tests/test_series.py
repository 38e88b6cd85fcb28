"""절단 급수 테스트"""
from fractions import Fraction

import pytest

from src.algebra.polynomial import SparsePolynomial, symbols
from src.algebra.series import (
    TruncatedSeries,
    factor_exponents,
    one_minus,
    rational_series,
    series_inverse_factor,
    series_matches_rational,
)


class TestTruncatedSeries:
    """절단 급수 기본 연산 테스트"""

    def test_truncation_drops_high_terms(self):
        t, = symbols("t")
        s = TruncatedSeries(1 + t ** 3 + t ** 5, 4)
        assert s.coefficients() == [1, 0, 0, 1, 0]

    def test_negative_truncation(self):
        with pytest.raises(ValueError, match="0 이상"):
            TruncatedSeries(SparsePolynomial.constant(1), -1)

    def test_product_respects_truncation(self):
        t, = symbols("t")
        a = TruncatedSeries(1 + t, 3)
        assert (a * a * a * a).coefficients() == [1, 4, 6, 4]

    def test_inverse_geometric(self):
        t, = symbols("t")
        inv = TruncatedSeries(1 - t, 6).inverse()
        assert inv.coefficients() == [1] * 7

    def test_inverse_scaled_constant(self):
        t, = symbols("t")
        s = TruncatedSeries(2 + 2 * t, 3)
        assert s.inverse().coefficients() == [Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(-1, 2)]

    def test_inverse_requires_unit(self):
        t, = symbols("t")
        with pytest.raises(ValueError, match="상수항이 0"):
            TruncatedSeries(t, 3).inverse()

    def test_truncate_cannot_grow(self):
        with pytest.raises(ValueError, match="늘릴 수 없습니다"):
            TruncatedSeries.one(("t",), 3).truncate(5)

    def test_coefficient_beyond_truncation(self):
        with pytest.raises(ValueError, match="절단 차수"):
            TruncatedSeries.one(("t",), 3).coefficient(4)

    def test_equality_at_common_truncation(self):
        t, = symbols("t")
        assert TruncatedSeries(1 + t + t ** 5, 4) == TruncatedSeries(1 + t, 8).truncate(4)


class TestPhi:
    """Φ_j 연산 테스트"""

    def test_phi_keeps_divisible_exponents(self):
        t, = symbols("t")
        s = TruncatedSeries(1 + t + t ** 2 + t ** 3 + t ** 4 + t ** 6, 6)
        assert s.phi(2).coefficients() == [1, 1, 1, 1]

    def test_phi_other_variable_untouched(self):
        z, w = symbols("z w")
        s = TruncatedSeries(z ** 3 * w + z ** 2 * w, 6)
        result = s.phi(3, "z", truncation=4)
        assert result.coefficient({"z": 1, "w": 1}) == 1
        assert result.coefficient({"z": 0, "w": 1}) == 0

    def test_phi_requires_variable(self):
        z, w = symbols("z w")
        with pytest.raises(ValueError, match="변수를 지정"):
            TruncatedSeries(z * w, 4).phi(2)

    def test_phi_invalid_j(self):
        with pytest.raises(ValueError, match="양의 정수"):
            TruncatedSeries.one(("t",), 3).phi(0)


class TestRationalSeries:
    """닫힌 형태 유리 급수 테스트"""

    def test_one_minus(self):
        t, = symbols("t")
        assert one_minus({"t": 4}) == 1 - t ** 4

    def test_inverse_factor(self):
        s = series_inverse_factor({"t": 2}, 7)
        assert s.coefficients() == [1, 0, 1, 0, 1, 0, 1, 0]

    def test_inverse_factor_zero_exponent(self):
        with pytest.raises(ValueError, match="기하급수"):
            series_inverse_factor({"t": 0}, 5)

    def test_factor_exponents_validation(self):
        t, = symbols("t")
        assert factor_exponents(1 - t ** 3) == {"t": 3}
        with pytest.raises(ValueError, match="1 - \\(단항식\\)"):
            factor_exponents(1 + t ** 3)

    def test_partition_into_twos_and_threes(self):
        """1/((1-t²)(1-t³)) 계수 = 2a + 3b = n 의 해 개수"""
        s = rational_series(1, [one_minus({"t": 2}), one_minus({"t": 3})], 12)
        expected = [sum(1 for a in range(7) for b in range(5) if 2 * a + 3 * b == n) for n in range(13)]
        assert s.coefficients() == expected

    def test_matches_rational(self):
        t, = symbols("t")
        s = rational_series(1 + t ** 3, [one_minus({"t": 2}), one_minus({"t": 3})], 15)
        assert series_matches_rational(s, 1 + t ** 3, [one_minus({"t": 2}), one_minus({"t": 3})])
        assert not series_matches_rational(s, 1, [one_minus({"t": 2}), one_minus({"t": 3})])

    def test_bivariate(self):
        z, w = symbols("z w")
        s = rational_series(1, [one_minus({"z": 1, "w": 1})], 6)
        assert s.coefficient({"z": 3, "w": 3}) == 1
        assert s.coefficient({"z": 3, "w": 2}) == 0


# --- 환 공리 ---

class TestSeriesRingLaws:
    """절단 아래 결합·교환·분배 법칙 테스트"""

    @pytest.fixture
    def triple(self):
        z, w = symbols("z w")
        a = TruncatedSeries(1 + 2 * z - w + Fraction(1, 3) * z * w ** 2, 6)
        b = TruncatedSeries(Fraction(-1, 2) + z ** 2 + 5 * w ** 3, 6)
        c = series_inverse_factor({"z": 1, "w": 1}, 6)
        return a, b, c

    def test_commutative(self, triple):
        a, b, _ = triple
        assert a * b == b * a
        assert a + b == b + a

    def test_associative(self, triple):
        a, b, c = triple
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)

    def test_distributive(self, triple):
        a, b, c = triple
        assert a * (b + c) == a * b + a * c

    @pytest.mark.parametrize("low", [0, 2, 5])
    def test_mixed_truncation_takes_minimum(self, triple, low):
        a, b, _ = triple
        product = a.truncate(low) * b
        assert product.truncation == low
        assert product == (a * b).truncate(low)

    def test_inverse_times_self(self, triple):
        a, _, _ = triple
        assert a * a.inverse() == TruncatedSeries.one(a.variables, 6)
