"""초월변환과 고전 공변식 테스트"""
from fractions import Fraction

import pytest

from src.algebra.algebra_utils import make_rng, random_rational_vector
from src.algebra.polynomial import symbols
from src.forms.binary_form import BinaryForm, apply_D, power_form
from src.forms.transvectant import (
    apolarity_pairing,
    catalecticant,
    cubic_covariant_suite,
    cubic_discriminant,
    gherardelli_determinant,
    hessian,
    quartic_invariants,
    transvectant,
)


@pytest.fixture
def xy_x_plus_y():
    """xy(x + y)"""
    return BinaryForm.from_coefficients([0, Fraction(1, 3), Fraction(1, 3), 0])


class TestTransvectant:
    """초월변환 (f, g)_n 테스트"""

    def test_quartic_fourth_transvectant(self):
        """(f, f)_4 = 1152·I"""
        f = BinaryForm.symbolic(4)
        I, _ = quartic_invariants(f)
        result = transvectant(f, f, 4)
        assert result.degree == 0
        assert result.coefficient(0) == I.scale(1152)

    def test_zeroth_transvectant_is_product(self):
        x, y = symbols("x y")
        f = BinaryForm.from_coefficients([1, 0])
        g = BinaryForm.from_coefficients([0, 1])
        assert transvectant(f, g, 0).to_polynomial() == x * y

    def test_first_transvectant_is_jacobian(self):
        """(x, y)_1 = ∂x/∂x ∂y/∂y - ∂x/∂y ∂y/∂x = 1"""
        f = BinaryForm.from_coefficients([1, 0])
        g = BinaryForm.from_coefficients([0, 1])
        assert transvectant(f, g, 1).coefficient(0) == 1

    def test_invalid_order(self):
        with pytest.raises(ValueError, match="초월변환 차수"):
            transvectant(BinaryForm.symbolic(2), BinaryForm.symbolic(3), 3)

    def test_result_is_covariant_leading_coefficient_in_kernel(self):
        """공변식의 선두 계수(x^e 계수)는 D 의 커널"""
        f = BinaryForm.symbolic(4)
        H = transvectant(f, f, 2)
        assert apply_D(H.coefficient(0), 4).is_zero()


class TestApolarity:
    """아폴라 쌍 테스트"""

    def test_power_pairing(self):
        """<l^d, m^d> = (l0 m1 - l1 m0)^d"""
        l0, l1, m0, m1 = symbols("l0 l1 m0 m1")
        d = 3
        value = apolarity_pairing(power_form([l0, l1], d), power_form([m0, m1], d))
        assert value == (l0 * m1 - l1 * m0) ** d

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_swap_sign(self, d):
        """<f, g> = (-1)^d <g, f>"""
        rng = make_rng(40 + d)
        f = BinaryForm.from_coefficients(random_rational_vector(rng, d + 1))
        g = BinaryForm.from_coefficients(random_rational_vector(rng, d + 1))
        assert apolarity_pairing(f, g) == (-1) ** d * apolarity_pairing(g, f)

    def test_swap_sign_symbolic(self):
        b = symbols("b0 b1 b2 b3")
        f = BinaryForm.symbolic(3)
        g = BinaryForm.from_coefficients(list(b))
        assert apolarity_pairing(f, g) == -apolarity_pairing(g, f)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError, match="같은 차수"):
            apolarity_pairing(BinaryForm.symbolic(2), BinaryForm.symbolic(3))


class TestQuarticInvariants:
    """사차 형식 I, J 와 카탈렉티컨트 테스트"""

    def test_catalecticant_shape(self):
        m = catalecticant(BinaryForm.symbolic(4))
        assert len(m) == 3 and all(len(r) == 3 for r in m)

    def test_catalecticant_odd_degree(self):
        with pytest.raises(ValueError, match="짝수 차수"):
            catalecticant(BinaryForm.symbolic(3))

    def test_not_quartic(self):
        with pytest.raises(ValueError, match="사차 형식"):
            quartic_invariants(BinaryForm.symbolic(3))

    def test_discriminant_relation(self):
        """x⁴ - y⁴ 는 서로 다른 근을 가지므로 I³ - 27J² ≠ 0, x²y² 는 중근이 있어 0"""
        distinct = BinaryForm.from_coefficients([1, 0, 0, 0, -1])
        I, J = quartic_invariants(distinct)
        assert I ** 3 - 27 * J ** 2 != 0
        double = BinaryForm.from_coefficients([0, 0, Fraction(1, 6), 0, 0])
        I, J = quartic_invariants(double)
        assert I ** 3 - 27 * J ** 2 == 0


class TestCubicCovariants:
    """이진 삼차 형식 공변식 테스트"""

    def test_discriminant_value(self, xy_x_plus_y):
        assert cubic_discriminant(xy_x_plus_y) == Fraction(1, 27)

    def test_hessian_value(self, xy_x_plus_y):
        x, y = symbols("x y")
        assert hessian(xy_x_plus_y).to_polynomial() == -(x ** 2 + x * y + y ** 2) / 9

    def test_hessian_formula(self):
        a0, a1, a2, a3 = symbols("a0 a1 a2 a3")
        x, y = symbols("x y")
        H = hessian(BinaryForm.symbolic(3)).to_polynomial()
        expected = (a0 * a2 - a1 ** 2) * x ** 2 + (a0 * a3 - a1 * a2) * x * y + (a1 * a3 - a2 ** 2) * y ** 2
        assert H == expected

    def test_hessian_low_degree(self):
        with pytest.raises(ValueError, match="차수 2 이상"):
            hessian(BinaryForm.symbolic(1))

    def test_syzygy_symbolic(self):
        """36H³ + 9Δf² + Q² = 0"""
        suite = cubic_covariant_suite(BinaryForm.symbolic(3))
        assert suite.syzygy_holds
        assert suite.q_covariant.degree == 3

    def test_not_cubic(self):
        with pytest.raises(ValueError, match="삼차 형식"):
            cubic_covariant_suite(BinaryForm.symbolic(4))


class TestGherardelli:
    """게라르델리 행렬식 테스트"""

    def test_expansion(self):
        f = BinaryForm.symbolic(4)
        I, J = quartic_invariants(f)
        result = gherardelli_determinant(f)
        assert result.coefficients[3] == Fraction(1, 2)
        assert result.coefficients[2].is_zero()
        assert result.coefficients[1] == I.scale(Fraction(-1, 2))
        assert result.coefficients[0] == J

    def test_not_quartic(self):
        with pytest.raises(ValueError, match="사차 형식"):
            gherardelli_determinant(BinaryForm.symbolic(2))
