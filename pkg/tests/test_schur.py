"""슈어 다항식과 플레티즘 분해 테스트"""
import pytest

from src.algebra.polynomial import symbols
from src.tableaux.schur import (
    plethysm_character,
    plethysm_table_df,
    schur_decompose,
    schur_dimension,
    schur_polynomial,
    sl_decompose,
    sl_partition,
)


class TestSchurPolynomial:
    """슈어 다항식 테스트"""

    def test_hook_in_two_variables(self):
        x1, x2 = symbols("x1 x2")
        assert schur_polynomial((2, 1), 2) == x1 ** 2 * x2 + x1 * x2 ** 2

    def test_too_many_rows(self):
        assert schur_polynomial((1, 1, 1), 2).is_zero()

    @pytest.mark.parametrize("shape,n,expected", [((2,), 3, 6), ((2, 1), 3, 8), ((4, 2), 3, 27), ((2, 2), 2, 1)])
    def test_dimension(self, shape, n, expected):
        assert schur_dimension(shape, n) == expected


class TestSchurDecompose:
    """선두항 소거 분해 테스트"""

    def test_binary_quartic_square(self):
        assert sl_decompose(plethysm_character(2, 4, 2)) == {(8,): 1, (4,): 1, (0,): 1}

    def test_quadric_of_cubics(self):
        assert schur_decompose(plethysm_character(2, 3, 3)) == {(6,): 1, (4, 2): 1}

    def test_cubic_of_quadrics(self):
        assert schur_decompose(plethysm_character(3, 2, 3)) == {(6,): 1, (4, 2): 1, (2, 2, 2): 1}
        assert sl_decompose(plethysm_character(3, 2, 3)) == {(6,): 1, (4, 2): 1, (0,): 1}

    def test_schur_polynomial_is_irreducible(self):
        assert schur_decompose(schur_polynomial((3, 1), 3)) == {(3, 1): 1}

    def test_not_symmetric(self):
        x1, x2 = symbols("x1 x2")
        with pytest.raises(ValueError, match="대칭인 다항식이 아닙니다"):
            schur_decompose(x1 ** 2 + x1 * x2)

    def test_negative_multiplicity(self):
        with pytest.raises(ValueError, match="지표가 아닌"):
            schur_decompose(schur_polynomial((2,), 2) - 2 * schur_polynomial((1, 1), 2))


class TestSLLabels:
    """SL(n) 표지 테스트"""

    def test_strip_full_columns(self):
        assert sl_partition((6, 2), 2) == (4,)
        assert sl_partition((2, 2, 2), 3) == (0,)

    def test_too_many_rows(self):
        with pytest.raises(ValueError, match="SL\\(2\\)"):
            sl_partition((1, 1, 1), 2)

    def test_table(self):
        df = plethysm_table_df(2, 3, 3)
        assert list(df["multiplicity"]) == [1, 1]
        assert df["dimension"].sum() == 55
