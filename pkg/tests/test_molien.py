"""대칭군 지표 데이터와 몰리엔 급수 테스트"""
from fractions import Fraction

import pytest

from src.algebra.polynomial import SparsePolynomial
from src.algebra.series import one_minus, series_matches_rational
from src.molien.groups import (
    RepresentationCharacter,
    SubgroupMode,
    available_groups,
    character_table_df,
    get_group,
    power_map_df,
    symmetric_group,
)
from src.molien.molien_series import (
    charpoly_from_power_traces,
    class_charpoly,
    molien_multiplicity,
    molien_series,
    sym_power_character,
)


def _factors(degrees):
    return [one_minus({"t": i}) for i in degrees]


@pytest.fixture
def s4():
    return symmetric_group(4)


# --- 군 데이터 ---

class TestGroupData:
    """내장 지표표 테스트"""

    @pytest.mark.parametrize("name,order", [("S2", 2), ("S3", 6), ("S4", 24), ("S6", 720)])
    def test_order_and_orthogonality(self, name, order):
        group, mode = get_group(name)
        assert mode == SubgroupMode.FULL
        assert group.order == order
        assert group.check_orthogonality()

    def test_alternating_lookup(self):
        group, mode = get_group("a6")
        assert group.name == "S6"
        assert mode == SubgroupMode.EVEN
        assert group.subgroup_order(mode) == 360

    def test_unknown_group(self):
        with pytest.raises(ValueError, match="지원하지 않는 군"):
            get_group("S5")

    def test_unknown_character(self, s4):
        with pytest.raises(ValueError, match="없는 지표"):
            s4.character("X5")

    def test_power_class(self, s4):
        """(1234)² = (13)(24)"""
        assert s4.classes[s4.power_class(4, 2)].cycle_type == (2, 2)
        assert s4.power_map(3)[3] == 0

    def test_available(self):
        assert set(available_groups()) == {"S2", "S3", "S4", "S6", "A3", "A4", "A6"}

    def test_character_table_df(self):
        df = character_table_df(symmetric_group(3))
        assert df.shape == (4, 3)
        assert list(df.loc["size"]) == [1, 3, 2]

    def test_power_map_df(self, s4):
        df = power_map_df(s4)
        assert list(df.index) == ["g^2", "g^3"]
        assert df.loc["g^2", "C5"] == "C3"


# --- 몰리엔 급수 ---

class TestCharpoly:
    """뉴턴 항등식 테스트"""

    def test_identity(self):
        assert charpoly_from_power_traces([2, 2]) == [1, 2, 1]

    def test_reflection(self):
        """고윳값 1, -1"""
        assert charpoly_from_power_traces([0, 2]) == [1, 0, -1]

    def test_class_charpoly(self, s4):
        t = SparsePolynomial.variable("t")
        W = s4.character("W")
        assert class_charpoly(W, s4, 3) == 1 + t + t ** 2


class TestMolienSeries:
    """몰리엔 급수 닫힌 형태 테스트"""

    def test_s4_on_W(self, s4):
        series = molien_series(s4.character("W"), s4, truncation=15)
        assert series_matches_rational(series, 1, _factors([2, 3]))

    def test_a4_on_W(self, s4):
        t = SparsePolynomial.variable("t")
        series = molien_series(s4.character("W"), s4, SubgroupMode.EVEN, truncation=15)
        assert series_matches_rational(series, 1 + t ** 3, _factors([2, 3]))

    def test_sign_of_s3(self):
        s3 = symmetric_group(3)
        assert series_matches_rational(molien_series(s3.character("sign"), s3, truncation=10), 1, _factors([2]))

    def test_s6_on_X8(self):
        s6 = symmetric_group(6)
        series = molien_series(s6.character("X8"), s6, truncation=18)
        assert series_matches_rational(series, 1, _factors(range(2, 7)))

    def test_a6_on_X5(self):
        t = SparsePolynomial.variable("t")
        s6 = symmetric_group(6)
        series = molien_series(s6.character("X5"), s6, SubgroupMode.EVEN, truncation=18)
        assert series_matches_rational(series, 1 + t ** 15, _factors(range(2, 7)))

    @pytest.mark.parametrize("mode", [SubgroupMode.FULL, SubgroupMode.EVEN])
    def test_s6_coefficients_are_dimensions(self, mode):
        """모든 기약 표현에서 계수는 음이 아닌 정수, 상수항 1"""
        s6 = symmetric_group(6)
        for name in s6.characters:
            coefficients = molien_series(s6.character(name), s6, mode, truncation=8).coefficients()
            assert coefficients[0] == 1, name
            for c in coefficients:
                assert c.denominator == 1 and c >= 0, name

    def test_rep_mismatch(self, s4):
        with pytest.raises(ValueError, match="맞지 않습니다"):
            molien_series(RepresentationCharacter("bad", (1, 1)), s4)


class TestMultiplicity:
    """대칭 거듭제곱 지표와 불변 차원 테스트"""

    def test_sym_square_dimension(self, s4):
        chi = sym_power_character(s4.character("standard"), s4, 2)
        assert chi.dimension == 6

    def test_sym_cube_dimension(self, s4):
        assert sym_power_character(s4.character("W"), s4, 3).dimension == 4

    def test_unsupported_power(self, s4):
        with pytest.raises(ValueError, match="k = 1, 2, 3"):
            sym_power_character(s4.character("W"), s4, 4)

    @pytest.mark.parametrize("mode", [SubgroupMode.FULL, SubgroupMode.EVEN])
    def test_agrees_with_series(self, s4, mode):
        W = s4.character("W")
        series = molien_series(W, s4, mode, truncation=3)
        for k in range(4):
            assert series.coefficient(k) == Fraction(molien_multiplicity(W, s4, k, mode))

    def test_a4_cubic_invariants(self, s4):
        assert molien_multiplicity(s4.character("W"), s4, 3, SubgroupMode.EVEN) == 2
