"""아론홀드 불변식, 극 삼차 형식, 스코르차 사차 형식 테스트"""
from fractions import Fraction

import pytest

from config.settings import ALGEBRA_CONSTANTS
from src.algebra.algebra_utils import make_rng, random_rational_vector
from src.algebra.polynomial import SparsePolynomial, symbols
from src.forms.aronhold import (
    END0_BASIS,
    aronhold_invariant,
    aronhold_matrix,
    aronhold_pfaffian,
    polar_cubic,
    scorza_quartic,
)
from src.forms.ternary_form import TernaryForm, ternary_coefficient_names


@pytest.fixture(scope="module")
def aronhold_S():
    return aronhold_invariant()


@pytest.fixture
def fermat_cubic():
    return TernaryForm.from_coefficients(3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1})


def _value(poly: SparsePolynomial, phi: TernaryForm) -> Fraction:
    return poly.evaluate({name: c.constant_value() for name, c in phi.coefficient_map().items()})


class TestAronholdInvariant:
    """커널 방법 아론홀드 불변식 테스트"""

    def test_25_monomials(self, aronhold_S):
        assert len(aronhold_S) == 25
        assert aronhold_S.is_homogeneous()
        assert aronhold_S.total_degree == 4

    def test_vanishes_on_fermat(self, aronhold_S, fermat_cubic):
        assert _value(aronhold_S, fermat_cubic) == 0

    def test_nonzero_on_triangle(self, aronhold_S):
        """x0³ + x1³ + x2³ - 3·x0x1x2 (세 직선의 합) 에서는 0이 아님"""
        x0, x1, x2 = symbols("x0 x1 x2")
        phi = TernaryForm.from_polynomial(x0 ** 3 + x1 ** 3 + x2 ** 3 - 3 * x0 * x1 * x2, 3)
        assert _value(aronhold_S, phi) != 0


class TestAronholdPfaffian:
    """파피안 구성 테스트"""

    def test_basis_is_trace_free(self):
        assert len(END0_BASIS) == 8

    def test_matrix_is_alternating(self, fermat_cubic):
        m = aronhold_matrix(fermat_cubic)
        for i in range(8):
            assert m[i][i].is_zero()
            for j in range(i):
                assert m[i][j] == -m[j][i]

    def test_pfaffian_vanishes_on_fermat(self, fermat_cubic):
        assert aronhold_pfaffian(fermat_cubic) == 0

    def test_pfaffian_proportional_on_random_cubics(self, aronhold_S):
        rng = make_rng(5)
        ratios = set()
        for _ in range(6):
            phi = TernaryForm(3, tuple(random_rational_vector(rng, 10)))
            s = _value(aronhold_S, phi)
            if s:
                ratios.add(Fraction(aronhold_pfaffian(phi)) / s)
        assert ratios == {Fraction(ALGEBRA_CONSTANTS["aronhold_pfaffian_ratio"])}

    def test_pfaffian_degree_four_along_lines(self):
        """직선 φ0 + s·φ1 위에서 4차: 5계 차분 0, 4계 차분 = 24·Pf(φ1)"""
        rng = make_rng(21)
        for _ in range(3):
            base = random_rational_vector(rng, 10)
            step = random_rational_vector(rng, 10)
            values = [
                Fraction(aronhold_pfaffian(TernaryForm(3, tuple(b + s * c for b, c in zip(base, step)))))
                for s in range(6)
            ]
            diffs = values
            for _ in range(4):
                diffs = [q - p for p, q in zip(diffs, diffs[1:])]
            assert diffs[0] == diffs[1] == 24 * Fraction(aronhold_pfaffian(TernaryForm(3, tuple(step))))

    def test_pfaffian_homogeneous(self):
        rng = make_rng(22)
        coeffs = random_rational_vector(rng, 10)
        phi = TernaryForm(3, tuple(coeffs))
        scaled = TernaryForm(3, tuple(Fraction(-3, 2) * c for c in coeffs))
        assert Fraction(aronhold_pfaffian(scaled)) == Fraction(81, 16) * Fraction(aronhold_pfaffian(phi))

    def test_requires_cubic(self):
        with pytest.raises(ValueError, match="삼차 형식"):
            aronhold_matrix(TernaryForm.symbolic(2))


class TestPolarAndScorza:
    """극 삼차 형식과 스코르차 사차 형식 테스트"""

    def test_polar_is_euler_derivative(self):
        """P_x(F) = Σ x_i ∂F/∂x_i"""
        x0, x1, x2 = symbols("x0 x1 x2")
        F = TernaryForm.from_polynomial(x0 ** 4 + 2 * x0 * x1 ** 2 * x2 + x2 ** 4, 4)
        polar = polar_cubic(F, [1, -1, 2])
        poly = F.to_polynomial()
        expected = poly.diff("x0") - poly.diff("x1") + 2 * poly.diff("x2")
        assert polar.to_polynomial() == expected

    def test_polar_wrong_point(self):
        with pytest.raises(ValueError, match="좌표는 3개"):
            polar_cubic(TernaryForm.symbolic(4), [1, 2])

    def test_polar_requires_quartic(self):
        with pytest.raises(ValueError, match="사차 형식"):
            polar_cubic(TernaryForm.symbolic(3), [1, 0, 0])

    def test_scorza_is_quartic(self):
        rng = make_rng(9)
        F = TernaryForm(4, tuple(random_rational_vector(rng, 15)))
        G = scorza_quartic(F)
        assert G.degree == 4
        assert not G.is_zero()

    def test_scorza_pointwise(self):
        """G(p) = Ar(P_p(F))"""
        rng = make_rng(13)
        F = TernaryForm(4, tuple(random_rational_vector(rng, 15)))
        G = scorza_quartic(F)
        p = [Fraction(1), Fraction(-2), Fraction(1, 3)]
        assert G.evaluate(p) == aronhold_pfaffian(polar_cubic(F, p))

    def test_coefficient_names(self):
        assert ternary_coefficient_names(3)[0] == "f300"
