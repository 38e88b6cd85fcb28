"""
직선 위 여섯 점 모듈

다섯 개의 교차 없는 매칭 t1..t5 와 별 모양 t0, 주베르 불변식 A..F,
세그레 3차 관계와 코블 환 관계 검증을 제공합니다.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple
import logging

import pandas as pd

from config.settings import VERIFICATION_DEFAULTS
from src.algebra.algebra_utils import make_rng, random_rational_vector
from src.algebra.polynomial import SparsePolynomial
from src.points.line_graphs import GraphCombination, MatchGraph, graph_evaluate, noncrossing_matchings

logger = logging.getLogger(__name__)

LETTERS = ("A", "B", "C", "D", "E", "F")

# 원 위 방향을 따른 여섯 점 함수
T_GRAPHS = {
    "t0": "(41)(25)(63)",
    "t1": "(21)(43)(65)",
    "t2": "(23)(45)(61)",
    "t3": "(23)(41)(65)",
    "t4": "(25)(43)(61)",
    "t5": "(21)(45)(63)",
}

JOUBERT_DEFINITIONS = {
    "A": "(25)(13)(46) + (51)(42)(36) + (14)(35)(26) + (43)(21)(56) + (32)(54)(16)",
    "B": "(53)(12)(46) + (14)(23)(56) + (25)(34)(16) + (31)(45)(26) + (42)(51)(36)",
    "C": "(53)(41)(26) + (34)(25)(16) + (42)(13)(56) + (21)(54)(36) + (15)(32)(46)",
    "D": "(45)(31)(26) + (53)(24)(16) + (41)(25)(36) + (32)(15)(46) + (21)(43)(56)",
    "E": "(31)(24)(56) + (12)(53)(46) + (25)(41)(36) + (54)(32)(16) + (43)(15)(26)",
    "F": "(42)(35)(16) + (23)(14)(56) + (31)(52)(46) + (15)(43)(26) + (54)(21)(36)",
}

SIX_CYCLE = (2, 3, 4, 5, 6, 1)
TRANSPOSITION_12 = (2, 1, 3, 4, 5, 6)


def t_graph(name: str) -> GraphCombination:
    if name not in T_GRAPHS:
        raise ValueError(f"알 수 없는 여섯 점 함수입니다: {name} (가능: {', '.join(T_GRAPHS)})")
    return GraphCombination.parse(T_GRAPHS[name], d=6)


def t_basis() -> List[GraphCombination]:
    """[t1, ..., t5]"""
    return [t_graph(f"t{k}") for k in range(1, 6)]


def noncrossing_basis() -> List[MatchGraph]:
    return noncrossing_matchings(6, (1,) * 6)


def t_coordinates(combination: GraphCombination) -> Tuple[Fraction, ...]:
    """직선화 후 t1..t5 좌표

    Raises:
        ValueError: 원자가 1^6 이 아닌 결합
    """
    if combination.valence() not in (None, (1,) * 6):
        raise ValueError(f"원자가 1^6 인 결합만 t 좌표를 갖습니다: {combination.valence()}")
    basis = noncrossing_basis()
    coords = combination.coordinates(basis)
    result = [Fraction(0)] * 5
    for k, t in enumerate(t_basis()):
        (graph, sign), = t.terms.items()
        position = [g.edges for g in basis].index(graph.edges)
        # t_k = sign·N → N 의 계수 c 는 t_k 의 계수 c·sign
        result[k] = coords[position] * sign
    return tuple(result)


def symbolic_points(d: int = 6) -> List[Tuple[SparsePolynomial, SparsePolynomial]]:
    """동차 좌표 (x_i, y_i) 를 미지수로 둔 점 목록"""
    return [(SparsePolynomial.variable(f"x{i}"), SparsePolynomial.variable(f"y{i}")) for i in range(1, d + 1)]


def joubert_graphs() -> Dict[str, GraphCombination]:
    return {letter: GraphCombination.parse(text, d=6) for letter, text in JOUBERT_DEFINITIONS.items()}


@dataclass
class JoubertResult:
    """주베르 불변식의 그래프 결합, t 좌표, (주어지면) 값"""
    graphs: Dict[str, GraphCombination]
    t_coordinates: Dict[str, Tuple[Fraction, ...]]
    values: Optional[Dict[str, object]] = None   # 점 구성을 넣은 값 (유리수 또는 다항식)


def joubert_invariants(points: Optional[Sequence[Sequence]] = None) -> JoubertResult:
    """A..F (points 가 없으면 그래프와 t 좌표만)"""
    graphs = joubert_graphs()
    coords = {letter: t_coordinates(g) for letter, g in graphs.items()}
    values = None
    if points is not None:
        values = {letter: graph_evaluate(g, points) for letter, g in graphs.items()}
    return JoubertResult(graphs, coords, values)


def joubert_permutation_action(sigma: Sequence[int]) -> Dict[str, Tuple[int, str]]:
    """σ 로 점 라벨을 바꿨을 때 각 주베르 불변식의 상: {X: (부호, Y)} (X∘σ = 부호·Y)

    Raises:
        ValueError: 상이 ±(주베르 불변식) 이 아닌 경우
    """
    graphs = joubert_graphs()
    coords = {letter: t_coordinates(g) for letter, g in graphs.items()}
    action: Dict[str, Tuple[int, str]] = {}
    for letter, graph in graphs.items():
        image = t_coordinates(graph.relabel(sigma))
        for other, target in coords.items():
            if image == target:
                action[letter] = (1, other)
                break
            if image == tuple(-c for c in target):
                action[letter] = (-1, other)
                break
        else:
            raise ValueError(f"{letter} 의 상이 주베르 불변식의 부호 배가 아닙니다: t 좌표 {image}")
    return action


def cross_ratio(points: Sequence[Sequence]) -> Fraction:
    """네 점의 비조화비 (j1 - j0) / j1, j0 = (21)(43), j1 = (23)(41)

    Raises:
        ValueError: j1 = 0 (퇴화 구성)
    """
    j0 = graph_evaluate(GraphCombination.parse("(21)(43)", d=4), points)
    j1 = graph_evaluate(GraphCombination.parse("(23)(41)", d=4), points)
    if not j1:
        raise ValueError("j1 = 0 인 퇴화 구성에서는 비조화비가 정의되지 않습니다.")
    return (j1 - j0) / j1


def b15(values: Dict[str, Fraction]) -> Fraction:
    """Π_{X<Y 사전식} (X - Y)"""
    result = Fraction(1)
    for a, b in combinations(LETTERS, 2):
        result *= values[a] - values[b]
    return result


def permute_points(points: Sequence[Sequence], sigma: Sequence[int]) -> List[Sequence]:
    """p'_i = p_σ(i)"""
    return [points[s - 1] for s in sigma]


def random_line_configuration(rng, d: int = 6) -> List[Tuple[Fraction, Fraction]]:
    return [tuple(random_rational_vector(rng, 2)) for _ in range(d)]


# --- 코블 환 검증 ---

@dataclass
class CobleReport:
    """여섯 점 불변식 환 관계 검증 결과"""
    segre_relation: bool = False          # t1·t2·t0 - t3·t4·t5 = 0
    t0_straightening: bool = False        # t0 = -t1 - t2 + t3 + t4 + t5
    e1_vanishes: bool = False             # A + ... + F = 0
    e3_vanishes: bool = False             # 3차 기본대칭식 = 0
    cube_sum_vanishes: bool = False       # A³ + ... + F³ = 0
    b15_invariant: bool = False           # (12), (123456) 에 대해 b15 불변
    trials: int = 0
    details: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all([
            self.segre_relation, self.t0_straightening, self.e1_vanishes,
            self.e3_vanishes, self.cube_sum_vanishes, self.b15_invariant,
        ])


def segre_relation_polynomial() -> SparsePolynomial:
    """t1·t2·(-t1 - t2 + t3 + t4 + t5) - t3·t4·t5 (12개 동차 좌표의 다항식)"""
    points = symbolic_points()
    t = {name: graph_evaluate(t_graph(name), points) for name in T_GRAPHS}
    t0_expr = -t["t1"] - t["t2"] + t["t3"] + t["t4"] + t["t5"]
    return t["t1"] * t["t2"] * t0_expr - t["t3"] * t["t4"] * t["t5"]


def coble_ring_checks(trials: Optional[int] = None, seed: Optional[int] = None) -> CobleReport:
    """세그레 관계, e1 = e3 = 0, 세제곱 합 = 0 (기호 계산), b15 불변성 (무작위 구성)"""
    trials = trials if trials is not None else VERIFICATION_DEFAULTS["random_trials"]
    report = CobleReport(trials=trials)

    segre = segre_relation_polynomial()
    report.segre_relation = segre.is_zero()

    t0_coords = t_coordinates(t_graph("t0"))
    report.t0_straightening = t0_coords == (-1, -1, 1, 1, 1)
    report.details["t0"] = str(t0_coords)

    values = joubert_invariants(symbolic_points()).values
    p1 = sum((values[x] for x in LETTERS), SparsePolynomial.zero())
    p2 = sum((values[x] ** 2 for x in LETTERS), SparsePolynomial.zero())
    p3 = sum((values[x] ** 3 for x in LETTERS), SparsePolynomial.zero())
    e1 = p1
    e2 = (p1 * p1 - p2) / 2
    e3 = (e2 * p1 - e1 * p2 + p3) / 3
    report.e1_vanishes = e1.is_zero()
    report.e3_vanishes = e3.is_zero()
    report.cube_sum_vanishes = p3.is_zero()

    rng = make_rng(seed)
    invariant = True
    for _ in range(trials):
        points = random_line_configuration(rng)
        base = b15(joubert_invariants(points).values)
        for sigma in (TRANSPOSITION_12, SIX_CYCLE):
            moved = b15(joubert_invariants(permute_points(points, sigma)).values)
            if moved != base:
                invariant = False
                report.details["b15"] = f"σ={sigma}: {base} → {moved}"
    report.b15_invariant = invariant

    log = logger.info if report.passed else logger.warning
    log(f"코블 환 검증: {'통과' if report.passed else '실패'} (무작위 {trials}회)")
    return report


def joubert_values_table(points: Sequence[Sequence]) -> pd.DataFrame:
    """A..F 값과 t 좌표를 담은 DataFrame"""
    result = joubert_invariants(points)
    return pd.DataFrame(
        [{"invariant": x, "value": result.values[x], **{f"t{k + 1}": result.t_coordinates[x][k] for k in range(5)}}
         for x in LETTERS]
    )
