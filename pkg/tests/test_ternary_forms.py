"""삼진 형식, 연산자 D₁/D₂, 평면 사차곡선 불변식 테스트"""
from fractions import Fraction
from itertools import permutations

import pytest

from src.algebra.algebra_utils import make_rng, random_rational_vector
from src.algebra.polynomial import SparsePolynomial, symbols
from src.forms.ternary_form import (
    TernaryForm,
    apply_D1,
    apply_D2,
    clebsch_catalecticant,
    cubic_invariant_A,
    polarize,
    power_form_ternary,
    restrict_to_line,
    ternary_coefficient_names,
    ternary_indices,
    ternary_invariant_basis,
    ternary_isobaric_monomials,
    trilinear_A,
)


def _random_quartic(rng) -> TernaryForm:
    return TernaryForm(4, tuple(random_rational_vector(rng, 15)))


@pytest.fixture
def rng():
    return make_rng(11)


class TestTernaryForm:
    """삼진 형식 자료형 테스트"""

    def test_index_order(self):
        assert ternary_indices(2) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
        assert ternary_coefficient_names(2)[1] == "f110"

    def test_wrong_coefficient_count(self):
        with pytest.raises(ValueError, match="계수 6개"):
            TernaryForm(2, (1, 2, 3))

    def test_from_coefficients_validation(self):
        with pytest.raises(ValueError, match="지수가 아닙니다"):
            TernaryForm.from_coefficients(3, {(2, 0, 0): 1})

    def test_multinomial_convention(self):
        """f = Σ (d!/α!) f_α x^α"""
        x0, x1, x2 = symbols("x0 x1 x2")
        f = TernaryForm.from_coefficients(2, {(1, 1, 0): 1})
        assert f.to_polynomial() == 2 * x0 * x1

    def test_from_polynomial_roundtrip(self):
        x0, x1, x2 = symbols("x0 x1 x2")
        poly = x0 ** 3 - 3 * x0 * x1 * x2 + Fraction(1, 2) * x2 ** 3
        assert TernaryForm.from_polynomial(poly, 3).to_polynomial() == poly

    def test_power_form(self):
        x0, x1, x2 = symbols("x0 x1 x2")
        f = power_form_ternary([1, -1, 2], 2)
        assert f.to_polynomial() == (x0 - x1 + 2 * x2) ** 2

    def test_evaluate(self):
        f = power_form_ternary([1, 1, 1], 3)
        assert f.evaluate([1, 2, 3]) == 216

    def test_restrict_to_line(self):
        x, y = symbols("x y")
        f = TernaryForm.from_coefficients(4, {(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1})
        g = restrict_to_line(f, (1, 0, 1), (0, 1, 0))
        assert g.to_polynomial() == 2 * x ** 4 + y ** 4


class TestIsobaricCounts:
    """등가중 단항식 개수 테스트"""

    def test_quartic_degree3(self):
        space = ternary_isobaric_monomials(4, 3)
        assert len(space) == 23
        assert space.total_monomials == 680

    def test_cubic_degree6(self):
        space = ternary_isobaric_monomials(3, 6)
        assert len(space) == 103
        assert space.total_monomials == 5005

    def test_not_divisible_by_three(self):
        space = ternary_isobaric_monomials(4, 2)
        assert space.weight is None
        assert len(space) == 0


class TestTernaryOperators:
    """연산자 D₁, D₂ 테스트"""

    def test_D1_moves_weight(self):
        f010 = SparsePolynomial.variable("f010")
        assert apply_D1(f010, 1) == SparsePolynomial.variable("f100")

    def test_D2_moves_weight(self):
        f001 = SparsePolynomial.variable("f001")
        assert apply_D2(f001, 1) == SparsePolynomial.variable("f010")

    def test_foreign_variable(self):
        with pytest.raises(ValueError, match="허용되지 않은 변수"):
            apply_D1(SparsePolynomial.variable("a0"), 2)


class TestTernaryInvariants:
    """삼진 형식 불변식 테스트"""

    def test_quartic_cubic_invariant(self):
        basis = ternary_invariant_basis(4, 3)
        A = cubic_invariant_A()
        assert len(basis) == 1
        assert basis[0].is_proportional_to(A)
        assert len(A) == 23

    def test_A_in_kernel(self):
        A = cubic_invariant_A()
        assert apply_D1(A, 4).is_zero()
        assert apply_D2(A, 4).is_zero()

    def test_conic_discriminant(self):
        """이차 형식의 3차 불변식은 대칭 행렬의 행렬식"""
        basis = ternary_invariant_basis(2, 3)
        assert len(basis) == 1
        assert len(basis[0]) == 5

    def test_A_vanishes_on_fourth_powers(self):
        f = power_form_ternary([1, 2, -1], 4)
        assert cubic_invariant_A(f) == 0

    def test_A_of_fermat(self):
        f = TernaryForm.from_coefficients(4, {(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1})
        assert cubic_invariant_A(f) == 1

    def test_A_requires_quartic(self):
        with pytest.raises(ValueError, match="사차 형식"):
            cubic_invariant_A(TernaryForm.symbolic(3))


class TestPolarization:
    """다중선형화 테스트"""

    def test_diagonal(self, rng):
        """A(f, f, f) = 6·A(f)"""
        f = _random_quartic(rng)
        assert trilinear_A(f, f, f) == 6 * cubic_invariant_A(f)

    def test_coordinate_powers(self):
        """A(x0⁴, x1⁴, x2⁴) = det(e0, e1, e2)⁴ = 1"""
        forms = [TernaryForm.from_coefficients(4, {alpha: 1}) for alpha in [(4, 0, 0), (0, 4, 0), (0, 0, 4)]]
        assert trilinear_A(*forms) == 1

    @pytest.mark.parametrize("method", ["polarize", "tableau"])
    def test_symmetric_under_all_permutations(self, rng, method):
        forms = [_random_quartic(rng) for _ in range(3)]
        values = {Fraction(trilinear_A(*(forms[i] for i in order), method=method)) for order in permutations(range(3))}
        assert len(values) == 1

    def test_tableau_method_proportional(self, rng):
        """타블로 전개와 다중선형화는 하나의 상수배 차이"""
        ratios = set()
        for _ in range(2):
            f, g, h = (_random_quartic(rng) for _ in range(3))
            polar = trilinear_A(f, g, h)
            tableau = trilinear_A(f, g, h, method="tableau")
            if polar:
                ratios.add(Fraction(tableau) / polar)
        assert len(ratios) == 1
        assert 0 not in ratios

    def test_unknown_method(self, rng):
        f = _random_quartic(rng)
        with pytest.raises(ValueError, match="알 수 없는 계산 방법"):
            trilinear_A(f, f, f, method="magic")

    def test_polarize_degree_mismatch(self):
        x = SparsePolynomial.variable("f400")
        with pytest.raises(ValueError, match="형식 개수"):
            polarize(x, [TernaryForm.symbolic(4), TernaryForm.symbolic(4)])


class TestClebschCatalecticant:
    """클렙시 카탈렉티컨트 테스트"""

    def test_random_quartic_not_clebsch(self, rng):
        assert not clebsch_catalecticant(_random_quartic(rng)).is_clebsch

    def test_sum_of_five_powers_is_clebsch(self, rng):
        total = power_form_ternary(random_rational_vector(rng, 3), 4)
        for _ in range(4):
            total = total + power_form_ternary(random_rational_vector(rng, 3), 4)
        result = clebsch_catalecticant(total)
        assert result.is_clebsch
        assert result.matrix.is_symmetric()

    def test_requires_quartic(self):
        with pytest.raises(ValueError, match="사차 형식"):
            clebsch_catalecticant(TernaryForm.symbolic(3))
