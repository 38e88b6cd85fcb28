"""
직선 위 점들의 그래프 대수 모듈

브래킷 (ij) 를 i → j 화살표로 보고, 단항식을 유향 다중그래프로 다룹니다.
- 교차하지 않는 완전 매칭(켐프 기저) 열거
- 교차 변 쌍에 3항 관계를 반복 적용하는 그래프 직선화
- 홀(Hall) 조건에 따른 이분 그래프 완전 매칭
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union
import logging

import numpy as np

from config.settings import ALGEBRA_CONSTANTS
from src.algebra.polynomial import Scalar, SparsePolynomial, collapse, to_fraction
from src.tableaux.brackets import BracketExpression, Monomial, parse_bracket_expression

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
Value = Union[Fraction, SparsePolynomial]


def edges_cross(e1: Edge, e2: Edge) -> bool:
    """원 위 현 (i,j), (k,l) 의 교차 여부 (꼭짓점을 공유하면 교차하지 않음)"""
    i, j = sorted(e1)
    k, l = sorted(e2)
    if len({i, j, k, l}) < 4:
        return False
    return (i < k < j) != (i < l < j)


@dataclass(frozen=True)
class MatchGraph:
    """꼭짓점 1..d 위의 변 다중집합 (각 변은 (작은 라벨, 큰 라벨))"""
    d: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"자기 루프는 허용되지 않습니다: ({i}{j})")
            if not (1 <= i <= self.d and 1 <= j <= self.d):
                raise ValueError(f"꼭짓점 라벨은 1..{self.d} 범위여야 합니다: ({i},{j})")
            if i > j:
                raise ValueError(f"정규형 변은 (작은 라벨, 큰 라벨) 이어야 합니다: ({i},{j})")

    def valence(self) -> Tuple[int, ...]:
        counts = [0] * self.d
        for i, j in self.edges:
            counts[i - 1] += 1
            counts[j - 1] += 1
        return tuple(counts)

    def is_noncrossing(self) -> bool:
        return _first_crossing(self.edges) is None

    def to_combination(self, coefficient: Scalar = 1) -> "GraphCombination":
        return GraphCombination.from_edges(self.d, self.edges, coefficient)

    def __str__(self) -> str:
        return "".join(_format_edge(e) for e in self.edges)


def _format_edge(edge: Edge) -> str:
    sep = "," if max(edge) > 9 else ""
    return f"({edge[0]}{sep}{edge[1]})"


def _first_crossing(edges: Sequence[Edge]) -> Optional[Tuple[int, int]]:
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            if edges_cross(edges[a], edges[b]):
                return a, b
    return None


def bracket2(p: Sequence, q: Sequence) -> Value:
    """(pq) = p0·q1 - p1·q0"""
    return p[0] * q[1] - p[1] * q[0]


class GraphCombination:
    """같은 원자가(valence) 벡터를 갖는 그래프들의 유리수 계수 선형결합

    내부적으로 길이 2 열의 브래킷 식으로 저장하며, 변 방향을 뒤집으면 부호가 바뀝니다.
    """

    __slots__ = ("d", "expression")

    def __init__(self, d: int, expression: Optional[BracketExpression] = None):
        self.d = d
        self.expression = expression if expression is not None else BracketExpression()
        self._check()

    def _check(self):
        valences = set()
        for monomial in self.expression.terms:
            for col in monomial:
                if len(col) != 2:
                    raise ValueError(f"그래프 변은 두 꼭짓점이어야 합니다: {col}")
                if min(col) < 1 or max(col) > self.d:
                    raise ValueError(f"꼭짓점 라벨은 1..{self.d} 범위여야 합니다: {col}")
            valences.add(MatchGraph(self.d, monomial).valence())
        if len(valences) > 1:
            raise ValueError(f"원자가 벡터가 서로 다른 그래프를 더할 수 없습니다: {sorted(valences)}")

    @classmethod
    def from_edges(cls, d: int, edges: Iterable[Sequence[int]], coefficient: Scalar = 1) -> "GraphCombination":
        """유향 변 목록 (i, j) 로 단항 그래프 생성 (i > j 이면 부호 반전)"""
        edges = [tuple(e) for e in edges]
        for i, j in edges:
            if i == j:
                raise ValueError(f"자기 루프는 허용되지 않습니다: ({i}{j})")
        return cls(d, BracketExpression.monomial(edges, coefficient))

    @classmethod
    def parse(cls, text: str, d: Optional[int] = None) -> "GraphCombination":
        """'(13)(24)', '(21)(43)(65) - 2(14)(23)(56)' 형식 파싱

        Raises:
            ValueError: 해석할 수 없거나 두 꼭짓점이 아닌 변
        """
        expression = parse_bracket_expression(text.replace("(", "[").replace(")", "]"))
        labels = [x for m in expression.terms for col in m for x in col]
        if d is None:
            d = max(labels) if labels else 0
        return cls(d, expression)

    @property
    def terms(self) -> Dict[MatchGraph, Fraction]:
        return {MatchGraph(self.d, m): c for m, c in self.expression.terms.items()}

    def is_zero(self) -> bool:
        return self.expression.is_zero()

    def valence(self) -> Optional[Tuple[int, ...]]:
        for graph in self.terms:
            return graph.valence()
        return None

    def _combine(self, other: "GraphCombination") -> int:
        if not isinstance(other, GraphCombination):
            raise TypeError(f"GraphCombination 과만 연산할 수 있습니다: {type(other).__name__}")
        return max(self.d, other.d)

    def __add__(self, other: "GraphCombination") -> "GraphCombination":
        return GraphCombination(self._combine(other), self.expression + other.expression)

    def __sub__(self, other: "GraphCombination") -> "GraphCombination":
        return GraphCombination(self._combine(other), self.expression - other.expression)

    def __neg__(self) -> "GraphCombination":
        return GraphCombination(self.d, -self.expression)

    def __mul__(self, other) -> "GraphCombination":
        if isinstance(other, GraphCombination):
            return GraphCombination(self._combine(other), self.expression * other.expression)
        return GraphCombination(self.d, self.expression * to_fraction(other))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphCombination):
            return NotImplemented
        return self.expression == other.expression

    __hash__ = None

    def relabel(self, sigma: Sequence[int]) -> "GraphCombination":
        """라벨 i 를 sigma[i-1] 로 바꾼 결합 (점 구성 p'_i = p_σ(i) 에서의 값과 같음)"""
        if sorted(sigma) != list(range(1, self.d + 1)):
            raise ValueError(f"1..{self.d} 의 치환이 아닙니다: {tuple(sigma)}")
        result = BracketExpression()
        for monomial, coeff in self.expression.terms.items():
            columns = [tuple(sigma[x - 1] for x in col) for col in monomial]
            result = result + BracketExpression.monomial(columns, coeff)
        return GraphCombination(self.d, result)

    def is_noncrossing(self) -> bool:
        return all(graph.is_noncrossing() for graph in self.terms)

    def straighten(self) -> "GraphCombination":
        return graph_straighten(self)

    def evaluate(self, points: Sequence[Sequence]) -> Value:
        return graph_evaluate(self, points)

    def coordinates(self, basis: Sequence[MatchGraph]) -> List[Fraction]:
        """직선화 후 basis 그래프 계수 목록

        Raises:
            ValueError: basis 밖의 그래프가 남는 경우
        """
        straight = graph_straighten(self).terms
        index = {g.edges: k for k, g in enumerate(basis)}
        coords = [Fraction(0)] * len(basis)
        for graph, coeff in straight.items():
            if graph.edges not in index:
                raise ValueError(f"기저에 없는 그래프가 남았습니다: {graph}")
            coords[index[graph.edges]] = coeff
        return coords

    def __str__(self) -> str:
        text = str(self.expression)
        return text.replace("[", "(").replace("]", ")")

    def __repr__(self) -> str:
        return f"GraphCombination(d={self.d}, {self})"


def _exchange(monomial: Monomial, a: int, b: int) -> Dict[Monomial, Fraction]:
    """p<q<r<s 일 때 (pr)(qs) = (pq)(rs) + (ps)(qr)"""
    rest = tuple(e for k, e in enumerate(monomial) if k not in (a, b))
    p, q, r, s = sorted(monomial[a] + monomial[b])
    replaced = BracketExpression.monomial(rest + ((p, q), (r, s))) + BracketExpression.monomial(rest + ((p, s), (q, r)))
    return replaced.terms


def graph_straighten(combination: GraphCombination, max_steps: Optional[int] = None) -> GraphCombination:
    """교차 변 쌍이 없어질 때까지 3항 관계 적용 (멱등, 값 보존)

    가장 앞선 교차 쌍부터 처리하며, 변 길이 합이 줄어들어 종료됩니다.

    Raises:
        RuntimeError: 최대 반복 횟수 초과
    """
    if max_steps is None:
        max_steps = ALGEBRA_CONSTANTS["max_straighten_steps"]
    current: Dict[Monomial, Fraction] = dict(combination.expression.terms)
    steps = 0
    while True:
        pending = [m for m in current if _first_crossing(m) is not None]
        if not pending:
            break
        steps += 1
        if steps > max_steps:
            raise RuntimeError(f"그래프 직선화가 {max_steps}회 안에 끝나지 않았습니다.")
        target = min(pending)
        coeff = current.pop(target)
        a, b = _first_crossing(target)
        for m, c in _exchange(target, a, b).items():
            total = current.get(m, 0) + coeff * c
            if total:
                current[m] = total
            else:
                current.pop(m, None)
    logger.debug(f"그래프 직선화 완료: {steps}단계, 항 {len(current)}개")
    expression = BracketExpression()
    expression.terms = current
    return GraphCombination(combination.d, expression)


def graph_evaluate(combination: GraphCombination, points: Sequence[Sequence]) -> Value:
    """변마다 2×2 행렬식을 곱해 계수와 함께 합산 (좌표는 유리수 또는 다항식)

    Raises:
        ValueError: 점 개수가 d 와 다른 경우
    """
    if len(points) != combination.d:
        raise ValueError(f"점이 {combination.d}개 필요합니다. (입력: {len(points)}개)")
    cache: Dict[Edge, Value] = {}
    total: Value = Fraction(0)
    for monomial, coeff in combination.expression.terms.items():
        value: Value = coeff
        for i, j in monomial:
            if (i, j) not in cache:
                cache[(i, j)] = bracket2(points[i - 1], points[j - 1])
            value = value * cache[(i, j)]
        total = total + value
    if isinstance(total, SparsePolynomial):
        return collapse(total)
    return total


# --- 켐프 기저 ---

def _noncrossing_on_circle(owners: Tuple[int, ...]) -> List[Tuple[Edge, ...]]:
    """원 위 위치들의 교차 없는 완전 매칭 (같은 주인을 잇는 현 제외)"""
    if not owners:
        return [()]
    results = []
    first = owners[0]
    for k in range(1, len(owners), 2):
        if owners[k] == first:
            continue
        for inner in _noncrossing_on_circle(owners[1:k]):
            for outer in _noncrossing_on_circle(owners[k + 1:]):
                results.append(((first, owners[k]),) + inner + outer)
    return results


def noncrossing_matchings(d: int, weight: Sequence[int]) -> List[MatchGraph]:
    """꼭짓점 i 의 차수가 weight[i-1] 인 교차 없는 완전 매칭 그래프 (정렬된 순서)

    Raises:
        ValueError: weight 길이가 d 와 다르거나 음수 성분
    """
    weight = tuple(int(h) for h in weight)
    if len(weight) != d:
        raise ValueError(f"weight 길이({len(weight)})가 d={d} 와 다릅니다.")
    if any(h < 0 for h in weight):
        raise ValueError(f"weight 성분은 0 이상이어야 합니다: {weight}")
    if sum(weight) % 2:
        return []
    owners = tuple(i for i in range(1, d + 1) for _ in range(weight[i - 1]))
    graphs = {tuple(sorted(matching)) for matching in _noncrossing_on_circle(owners)}
    result = [MatchGraph(d, edges) for edges in sorted(graphs)]
    logger.debug(f"교차 없는 매칭: d={d}, weight={weight}, {len(result)}개")
    return result


# --- 홀 결혼 정리 ---

@dataclass
class HallResult:
    """완전 매칭 또는 홀 조건 위반 집합"""
    matching: Optional[Dict[Hashable, Hashable]]   # 왼쪽 → 오른쪽
    violator: Optional[FrozenSet[Hashable]]        # |N(Y)| < |Y| 인 왼쪽 부분집합 Y

    @property
    def has_matching(self) -> bool:
        return self.matching is not None


def hall_perfect_matching(
    left: Sequence[Hashable],
    right: Sequence[Hashable],
    edges: Iterable[Tuple[Hashable, Hashable]]
) -> HallResult:
    """증가 경로(쿤 알고리즘)로 완전 매칭을 찾고, 실패하면 위반 집합 Y 를 돌려줌

    Raises:
        ValueError: 양쪽 크기가 다르거나 변 끝점이 꼭짓점 목록에 없는 경우
    """
    if len(left) != len(right):
        raise ValueError(f"양쪽 꼭짓점 수가 달라 완전 매칭이 불가능합니다: {len(left)} != {len(right)}")
    left_set, right_set = set(left), set(right)
    adjacency: Dict[Hashable, List[Hashable]] = {u: [] for u in left}
    for u, v in edges:
        if u not in left_set or v not in right_set:
            raise ValueError(f"변 ({u}, {v}) 의 끝점이 꼭짓점 목록에 없습니다.")
        if v not in adjacency[u]:
            adjacency[u].append(v)

    match_right: Dict[Hashable, Hashable] = {}

    def augment(u, visited) -> bool:
        for v in adjacency[u]:
            if v in visited:
                continue
            visited.add(v)
            if v not in match_right or augment(match_right[v], visited):
                match_right[v] = u
                return True
        return False

    for u in left:
        visited: set = set()
        if not augment(u, visited):
            violator = frozenset({u} | {match_right[v] for v in visited})
            logger.debug(f"홀 조건 위반: |Y|={len(violator)}, |N(Y)|={len(visited)}")
            return HallResult(None, violator)
    return HallResult({u: v for v, u in match_right.items()}, None)


def random_regular_bipartite(n: int, m: int, rng: np.random.Generator) -> List[Tuple[int, int]]:
    """왼쪽/오른쪽 n 개 꼭짓점의 m-정규 이분 다중그래프 (무작위 완전 매칭 m 개의 합)"""
    edges = []
    for _ in range(m):
        perm = rng.permutation(n)
        edges.extend((i, int(perm[i])) for i in range(n))
    return edges
