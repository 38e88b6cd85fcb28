"""직선 위 점들의 그래프 대수와 여섯 점 불변식 테스트"""
from fractions import Fraction

import pytest

from src.algebra.algebra_utils import make_rng
from src.algebra.linalg import ExactMatrix, determinant
from src.hilbert.counting import howe_dimension
from src.points.line_graphs import (
    GraphCombination,
    MatchGraph,
    edges_cross,
    graph_evaluate,
    graph_straighten,
    hall_perfect_matching,
    noncrossing_matchings,
    random_regular_bipartite,
)
from src.points.six_points_line import (
    SIX_CYCLE,
    TRANSPOSITION_12,
    b15,
    coble_ring_checks,
    cross_ratio,
    joubert_invariants,
    joubert_permutation_action,
    joubert_values_table,
    permute_points,
    random_line_configuration,
    t_coordinates,
    t_graph,
)


@pytest.fixture
def integer_points():
    """p_i = (i, 1)"""
    return [(Fraction(i), Fraction(1)) for i in range(1, 7)]


# --- 그래프 대수 ---

class TestGraphs:
    """그래프 자료형 테스트"""

    def test_edges_cross(self):
        assert edges_cross((1, 3), (2, 4))
        assert not edges_cross((1, 4), (2, 3))
        assert not edges_cross((1, 2), (2, 3))

    def test_match_graph_validation(self):
        with pytest.raises(ValueError, match="정규형"):
            MatchGraph(4, ((2, 1),))
        with pytest.raises(ValueError, match="범위"):
            MatchGraph(3, ((1, 4),))

    def test_self_loop(self):
        with pytest.raises(ValueError, match="자기 루프"):
            GraphCombination.from_edges(4, [(1, 1)])

    def test_reversed_edge_flips_sign(self):
        assert GraphCombination.parse("(21)(43)") == GraphCombination.parse("(12)(34)")
        assert GraphCombination.parse("(21)(34)") == -GraphCombination.parse("(12)(34)")

    def test_mixed_valence(self):
        with pytest.raises(ValueError, match="원자가 벡터"):
            GraphCombination.parse("(12)(34) + (12)(13)", d=4)

    def test_evaluate_point_count(self):
        with pytest.raises(ValueError, match="점이 4개"):
            graph_evaluate(GraphCombination.parse("(12)(34)"), [(1, 0), (0, 1)])

    def test_relabel_matches_permuted_points(self):
        rng = make_rng(3)
        combination = GraphCombination.parse("(13)(25)(46) - 2(12)(34)(56)")
        sigma = (3, 1, 2, 6, 4, 5)
        points = random_line_configuration(rng)
        moved = graph_evaluate(combination, permute_points(points, sigma))
        assert graph_evaluate(combination.relabel(sigma), points) == moved

    def test_relabel_not_permutation(self):
        with pytest.raises(ValueError, match="치환이 아닙니다"):
            GraphCombination.parse("(12)(34)").relabel((1, 1, 2, 3))


class TestStraightening:
    """교차 변 3항 관계 직선화 테스트"""

    def test_crossing_pair(self):
        result = graph_straighten(GraphCombination.parse("(13)(24)"))
        assert result == GraphCombination.parse("(12)(34) + (14)(23)")

    def test_noncrossing_fixed(self):
        combination = GraphCombination.parse("(12)(34)")
        assert combination.is_noncrossing()
        assert graph_straighten(combination) == combination

    def test_result_noncrossing(self):
        result = GraphCombination.parse("(15)(26)(37)(48)").straighten()
        assert result.is_noncrossing()
        assert graph_straighten(result) == result

    @pytest.mark.parametrize("text", ["(13)(24)", "(14)(25)(36)", "(15)(26)(37)(48)", "(13)(13)(24)(24)"])
    def test_preserves_values(self, text):
        combination = GraphCombination.parse(text)
        straight = graph_straighten(combination)
        rng = make_rng(17)
        for _ in range(10):
            points = random_line_configuration(rng, combination.d)
            assert graph_evaluate(straight, points) == graph_evaluate(combination, points)

    def test_step_limit(self):
        with pytest.raises(RuntimeError, match="끝나지 않았습니다"):
            graph_straighten(GraphCombination.parse("(13)(24)"), max_steps=0)


class TestNoncrossingMatchings:
    """켐프 기저 테스트"""

    def test_six_points(self):
        matchings = noncrossing_matchings(6, (1,) * 6)
        assert len(matchings) == 5
        assert all(m.is_noncrossing() for m in matchings)

    @pytest.mark.parametrize("d,k", [(4, 1), (4, 2), (6, 1), (8, 1)])
    def test_matches_howe(self, d, k):
        assert len(noncrossing_matchings(d, (k,) * d)) == howe_dimension(d, k)

    def test_odd_total(self):
        assert noncrossing_matchings(3, (1, 1, 1)) == []

    def test_weight_length(self):
        with pytest.raises(ValueError, match="weight 길이"):
            noncrossing_matchings(4, (1, 1))

    def test_negative_weight(self):
        with pytest.raises(ValueError, match="0 이상"):
            noncrossing_matchings(2, (1, -1))


class TestHall:
    """이분 그래프 완전 매칭 테스트"""

    def test_matching_found(self):
        result = hall_perfect_matching([1, 2], ["a", "b"], [(1, "a"), (1, "b"), (2, "a")])
        assert result.has_matching
        assert result.matching == {1: "b", 2: "a"}

    def test_violator(self):
        edges = [(1, "a"), (2, "a"), (3, "b"), (3, "c")]
        result = hall_perfect_matching([1, 2, 3], ["a", "b", "c"], edges)
        assert not result.has_matching
        assert result.violator == frozenset({1, 2})

    def test_regular_bipartite_has_matching(self):
        rng = make_rng(8)
        edges = random_regular_bipartite(6, 3, rng)
        assert hall_perfect_matching(range(6), range(6), edges).has_matching

    def test_size_mismatch(self):
        with pytest.raises(ValueError, match="양쪽 꼭짓점 수"):
            hall_perfect_matching([1], [1, 2], [])

    def test_unknown_endpoint(self):
        with pytest.raises(ValueError, match="꼭짓점 목록에 없습니다"):
            hall_perfect_matching([1], ["a"], [(1, "b")])


# --- 여섯 점 ---

class TestSixPoints:
    """t 좌표, 주베르 불변식 테스트"""

    def test_t0_straightening(self):
        assert t_coordinates(t_graph("t0")) == (-1, -1, 1, 1, 1)

    def test_basis_coordinates(self):
        assert t_coordinates(t_graph("t3")) == (0, 0, 1, 0, 0)

    def test_unknown_t(self):
        with pytest.raises(ValueError, match="알 수 없는 여섯 점 함수"):
            t_graph("t9")

    def test_t_coordinates_need_perfect_matching(self):
        with pytest.raises(ValueError, match="1\\^6"):
            t_coordinates(GraphCombination.parse("(12)(12)(34)(34)(56)(56)"))

    def test_joubert_coordinates(self):
        coords = joubert_invariants().t_coordinates
        assert coords["A"] == (-4, -4, 2, 2, 2)
        assert coords["B"] == (0, 0, 2, 2, -2)
        assert coords["C"] == (0, 0, -2, 2, 2)
        assert coords["D"] == (0, 4, -2, -2, -2)
        assert coords["E"] == (4, 0, -2, -2, -2)
        assert coords["F"] == (0, 0, 2, -2, 2)

    def test_joubert_basis_change_invertible(self):
        """A..F 는 t1..t5 공간을 생성하고 A+...+F = 0 이 유일한 관계"""
        coords = joubert_invariants().t_coordinates
        rows = [coords[x] for x in "ABCDEF"]
        assert ExactMatrix(rows).rank() == 5
        assert determinant(rows[:5]) != 0
        assert all(sum(column) == 0 for column in zip(*rows))

    def test_joubert_values(self, integer_points):
        values = joubert_invariants(integer_points).values
        assert [values[x] for x in "ABCDEF"] == [-66, -30, -30, 62, 46, 18]
        assert sum(values.values()) == 0

    def test_transposition_action(self):
        action = joubert_permutation_action(TRANSPOSITION_12)
        assert [action[x] for x in "ABC"] == [(-1, "D"), (-1, "E"), (-1, "F")]
        assert action["D"] == (-1, "A")

    def test_six_cycle_action(self):
        action = joubert_permutation_action(SIX_CYCLE)
        assert all(sign == -1 for sign, _ in action.values())
        assert sorted(target for _, target in action.values()) == list("ABCDEF")

    def test_b15_invariant(self, integer_points):
        values = joubert_invariants(integer_points).values
        for sigma in (TRANSPOSITION_12, SIX_CYCLE):
            moved = joubert_invariants(permute_points(integer_points, sigma)).values
            assert b15(moved) == b15(values)

    def test_values_table(self, integer_points):
        df = joubert_values_table(integer_points)
        assert list(df["invariant"]) == list("ABCDEF")
        assert df.loc[0, "t1"] == -4

    def test_coble_ring(self):
        report = coble_ring_checks(trials=2, seed=1)
        assert report.passed, report.details


class TestCrossRatio:
    """비조화비 테스트"""

    def test_value(self):
        points = [(0, 1), (1, 1), (2, 1), (3, 1)]
        assert cross_ratio(points) == Fraction(4, 3)

    def test_degenerate(self):
        with pytest.raises(ValueError, match="퇴화"):
            cross_ratio([(0, 1), (1, 1), (1, 1), (3, 1)])
