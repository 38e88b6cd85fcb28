"""
평면 위 여섯 점 모듈

- 브래킷 (ijk), 두 점을 지나는 직선 (ijx)
- 다섯 점을 지나는 원뿔곡선과 원뿔 불변식 d2
- 크레모나 6면체 3차식 a..f 와 윗줄 불변식 ā..f̄ (라그랑주 항등식)
- 15개 직선, 차수 4 관계, 몰리 공변식 검증
"""
from dataclasses import dataclass, field
from fractions import Fraction
import re
from typing import Dict, List, Optional, Sequence, Tuple, Union
import logging

import pandas as pd

from config.settings import SYMBOL_NAMES, VERIFICATION_DEFAULTS
from src.algebra.algebra_utils import make_rng, random_rational_vector
from src.algebra.linalg import ExactMatrix, determinant, kernel_basis
from src.algebra.polynomial import SparsePolynomial, collapse, to_fraction
from src.forms.ternary_form import TernaryForm
from src.points.six_points_line import JOUBERT_DEFINITIONS, LETTERS

logger = logging.getLogger(__name__)

Coordinate = Union[Fraction, SparsePolynomial]
Pair = Tuple[int, int]


@dataclass(frozen=True)
class PlaneConfig:
    """사영평면 위 점들의 동차 좌표 (라벨 1..n)"""
    points: Tuple[Tuple[Coordinate, ...], ...]

    def __post_init__(self):
        for idx, p in enumerate(self.points, start=1):
            if len(p) != 3:
                raise ValueError(f"점 {idx} 의 좌표는 3개여야 합니다: {p}")
            if all(not isinstance(c, SparsePolynomial) and to_fraction(c) == 0 for c in p):
                raise ValueError(f"점 {idx} 가 영벡터입니다.")

    @classmethod
    def of(cls, points: Sequence[Sequence]) -> "PlaneConfig":
        return cls(tuple(
            tuple(c if isinstance(c, SparsePolynomial) else to_fraction(c) for c in p) for p in points
        ))

    @classmethod
    def random(cls, rng, n: int = 6) -> "PlaneConfig":
        points = []
        while len(points) < n:
            p = random_rational_vector(rng, 3)
            if any(p):
                points.append(p)
        return cls.of(points)

    @classmethod
    def symbolic(cls, n: int = 6) -> "PlaneConfig":
        """좌표 p{i}_{j} 를 미지수로 둔 구성"""
        return cls(tuple(
            tuple(SparsePolynomial.variable(f"p{i}_{j}") for j in range(3)) for i in range(1, n + 1)
        ))

    def __len__(self) -> int:
        return len(self.points)

    def point(self, label: int) -> Tuple[Coordinate, ...]:
        if not 1 <= label <= len(self.points):
            raise ValueError(f"점 라벨은 1..{len(self.points)} 범위여야 합니다: {label}")
        return self.points[label - 1]

    def permuted(self, sigma: Sequence[int]) -> "PlaneConfig":
        """p'_i = p_σ(i)"""
        if sorted(sigma) != list(range(1, len(self.points) + 1)):
            raise ValueError(f"1..{len(self.points)} 의 치환이 아닙니다: {tuple(sigma)}")
        return PlaneConfig(tuple(self.points[s - 1] for s in sigma))

    def scaled(self, factor) -> "PlaneConfig":
        factor = to_fraction(factor)
        return PlaneConfig(tuple(tuple(c * factor for c in p) for p in self.points))


def _require_points(config: PlaneConfig, n: int):
    if len(config) < n:
        raise ValueError(f"점이 {n}개 이상 필요합니다. (입력: {len(config)}개)")


def _distinct(*labels: int):
    if len(set(labels)) != len(labels):
        raise ValueError(f"브래킷 라벨이 중복되었습니다: {labels}")


def bracket3(config: PlaneConfig, i: int, j: int, k: int) -> Coordinate:
    """(ijk) = det(p_i, p_j, p_k)

    Raises:
        ValueError: 라벨 중복
    """
    _distinct(i, j, k)
    return determinant([list(config.point(i)), list(config.point(j)), list(config.point(k))])


def _x_row() -> List[SparsePolynomial]:
    return [SparsePolynomial.variable(v) for v in SYMBOL_NAMES["ternary_variables"]]


def line_form(config: PlaneConfig, i: int, j: int) -> SparsePolynomial:
    """(ijx) = det(p_i, p_j, x)"""
    _distinct(i, j)
    poly = determinant([list(config.point(i)), list(config.point(j)), _x_row()])
    return poly if isinstance(poly, SparsePolynomial) else SparsePolynomial.constant(poly)


def lagrange_bracket(config: PlaneConfig, first: Pair, second: Pair, third: Pair) -> Coordinate:
    """(ij, kl, mn) = (ijm)(kln) - (ijn)(klm)"""
    (i, j), (k, l), (m, n) = first, second, third
    return bracket3(config, i, j, m) * bracket3(config, k, l, n) - bracket3(config, i, j, n) * bracket3(config, k, l, m)


def pair_partitions(labels: Sequence = (1, 2, 3, 4, 5, 6)) -> List[Tuple[Pair, ...]]:
    """원소를 두 개씩 묶는 모든 분할 (6개 원소면 15개)"""
    labels = list(labels)
    if not labels:
        return [()]
    first, rest = labels[0], labels[1:]
    result = []
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1:]
        for tail in pair_partitions(remaining):
            result.append(((first, partner),) + tail)
    return result


@dataclass
class OverlineIdentityReport:
    """(ij,kl,mn) 의 세 가지 브래킷 전개 일치 여부"""
    mismatches: List[Tuple[Pair, ...]] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.mismatches


def overline_identity_check(config: PlaneConfig) -> OverlineIdentityReport:
    """15개 쌍 분할마다
    (ijm)(kln) - (ijn)(klm) = (ijl)(kmn) - (ijk)(lmn) = (ikl)(jmn) - (jkl)(imn)
    """
    _require_points(config, 6)
    report = OverlineIdentityReport()
    for (i, j), (k, l), (m, n) in pair_partitions():
        b = lambda a, c, e: bracket3(config, a, c, e)
        first = b(i, j, m) * b(k, l, n) - b(i, j, n) * b(k, l, m)
        second = b(i, j, l) * b(k, m, n) - b(i, j, k) * b(l, m, n)
        third = b(i, k, l) * b(j, m, n) - b(j, k, l) * b(i, m, n)
        report.checked += 1
        if not (first - second == 0 and first - third == 0):
            report.mismatches.append(((i, j), (k, l), (m, n)))
    return report


# --- 원뿔곡선 ---

def conic_through_five(config: PlaneConfig) -> TernaryForm:
    """점 1..5 를 지나는 원뿔곡선 [125][345][13x][24x] - [135][245][12x][34x]

    Raises:
        ValueError: 식이 항등적으로 0 이 되는 퇴화 구성
    """
    _require_points(config, 5)
    b = lambda i, j, k: bracket3(config, i, j, k)
    x = lambda i, j: line_form(config, i, j)
    poly = x(1, 3) * x(2, 4) * b(1, 2, 5) * b(3, 4, 5) - x(1, 2) * x(3, 4) * b(1, 3, 5) * b(2, 4, 5)
    if poly.is_zero():
        raise ValueError("다섯 점이 퇴화 위치에 있어 원뿔곡선 식이 0 입니다.")
    return TernaryForm.from_polynomial(poly, 2)


def conic_invariant_d2(config: PlaneConfig) -> Coordinate:
    """d2 = [125][345][136][246] - [135][245][126][346] (여섯 점이 한 원뿔곡선 위에 있을 때 0)"""
    _require_points(config, 6)
    b = lambda i, j, k: bracket3(config, i, j, k)
    return b(1, 2, 5) * b(3, 4, 5) * b(1, 3, 6) * b(2, 4, 6) - b(1, 3, 5) * b(2, 4, 5) * b(1, 2, 6) * b(3, 4, 6)


# --- 크레모나 3차식 ---

def _cremona_terms() -> Dict[str, List[Tuple[Pair, Pair, Pair]]]:
    terms = {}
    for letter, text in JOUBERT_DEFINITIONS.items():
        terms[letter] = []
        for chunk in text.split("+"):
            pairs = [(int(a), int(b)) for a, b in re.findall(r"\((\d)(\d)\)", chunk)]
            terms[letter].append(tuple(pairs))
    return terms


CREMONA_TERMS = _cremona_terms()


@dataclass
class CremonaResult:
    """크레모나 3차식 a..f 와 윗줄 불변식 ā..f̄"""
    cubics: Dict[str, SparsePolynomial]
    overlines: Dict[str, Coordinate]

    def cubic_sum(self) -> SparsePolynomial:
        return sum(self.cubics.values(), SparsePolynomial.zero())

    def overline_sum(self) -> Coordinate:
        return sum(self.overlines.values(), Fraction(0))

    def weighted_sum(self) -> SparsePolynomial:
        """Σ ā·a"""
        return sum((self.cubics[x] * self.overlines[x] for x in LETTERS), SparsePolynomial.zero())

    def cube_sum(self) -> SparsePolynomial:
        return sum((self.cubics[x] ** 3 for x in LETTERS), SparsePolynomial.zero())

    def elementary_symmetric(self, k: int) -> Coordinate:
        """ā..f̄ 의 k 차 기본대칭식"""
        e: List[Coordinate] = [Fraction(1)] + [Fraction(0)] * 6
        for v in (self.overlines[x] for x in LETTERS):
            for i in range(6, 0, -1):
                e[i] = e[i] + e[i - 1] * v
        return e[k]


def cremona_cubics(config: PlaneConfig) -> CremonaResult:
    """a = (25x)(13x)(46x) + ..., ā = (25,13,46) + ... (주베르 목록과 같은 쌍 배열)"""
    _require_points(config, 6)
    lines: Dict[Pair, SparsePolynomial] = {}
    overline_cache: Dict[Tuple[Pair, Pair, Pair], Coordinate] = {}

    def line(pair: Pair) -> SparsePolynomial:
        if pair not in lines:
            lines[pair] = line_form(config, *pair)
        return lines[pair]

    cubics: Dict[str, SparsePolynomial] = {}
    overlines: Dict[str, Coordinate] = {}
    for letter, terms in CREMONA_TERMS.items():
        cubic = SparsePolynomial.zero()
        value: Coordinate = Fraction(0)
        for p, q, r in terms:
            cubic = cubic + line(p) * line(q) * line(r)
            if (p, q, r) not in overline_cache:
                overline_cache[(p, q, r)] = lagrange_bracket(config, p, q, r)
            value = value + overline_cache[(p, q, r)]
        cubics[letter] = cubic
        overlines[letter] = collapse(value) if isinstance(value, SparsePolynomial) else value
    logger.debug(f"크레모나 3차식 계산 완료: ā..f̄ = {[str(overlines[x]) for x in LETTERS]}")
    return CremonaResult(cubics, overlines)


def cremona_action(config: PlaneConfig, sigma: Sequence[int]) -> Dict[str, Tuple[int, str]]:
    """σ 로 점을 바꿨을 때 3차식의 상 {x: (부호, y)} (x(σ·config) = 부호·y(config))

    Raises:
        ValueError: 상이 ±(3차식) 이 아닌 경우
    """
    base = cremona_cubics(config).cubics
    moved = cremona_cubics(config.permuted(sigma)).cubics
    action: Dict[str, Tuple[int, str]] = {}
    for letter, cubic in moved.items():
        for other, target in base.items():
            if cubic == target:
                action[letter] = (1, other)
                break
            if cubic == -target:
                action[letter] = (-1, other)
                break
        else:
            raise ValueError(f"{letter} 의 상이 크레모나 3차식의 부호 배가 아닙니다.")
    return action


def morley_covariant(config: PlaneConfig) -> SparsePolynomial:
    """ā²a + b̄²b + ... + f̄²f"""
    result = cremona_cubics(config)
    return sum(
        (result.cubics[x] * (result.overlines[x] ** 2) for x in LETTERS),
        SparsePolynomial.zero(),
    )


# --- 6면체 곡면의 15개 직선 ---

@dataclass
class HexahedralReport:
    """쌍 분할별 직선 포함 여부"""
    results: Dict[str, bool] = field(default_factory=dict)   # 'ab|cd|ef' → 통과 여부

    @property
    def passed(self) -> bool:
        return len(self.results) == 15 and all(self.results.values())

    @property
    def failed_partitions(self) -> List[str]:
        return [k for k, ok in self.results.items() if not ok]


def hexahedral_line_check(config: PlaneConfig, cube_weights: Optional[Sequence] = None) -> HexahedralReport:
    """(a..f) 좌표에서 X_p + X_q = 0 (세 쌍), ΣāX = 0 인 직선 위에서
    ΣX 와 Σ w·X³ 가 항등적으로 0 인지 검사 (w 기본값은 모두 1)

    Raises:
        ValueError: 가중치가 6개가 아닌 경우
    """
    return _check_lines(cremona_cubics(config).overlines, cube_weights)


def _check_lines(overlines: Dict[str, Fraction], cube_weights: Optional[Sequence] = None) -> HexahedralReport:
    weights = [to_fraction(w) for w in (cube_weights or [1] * 6)]
    if len(weights) != 6:
        raise ValueError(f"3차식 가중치는 6개여야 합니다: {len(weights)}개")
    bar = [to_fraction(overlines[x]) for x in LETTERS]
    report = HexahedralReport()
    for partition in pair_partitions(range(6)):
        rows = []
        for p, q in partition:
            row = [0] * 6
            row[p], row[q] = 1, 1
            rows.append(row)
        rows.append(bar)
        basis = kernel_basis(ExactMatrix(rows, 6))
        params = [SparsePolynomial.variable(f"s{k}") for k in range(len(basis))]
        coords = [
            sum((params[k] * basis[k][i] for k in range(len(basis))), SparsePolynomial.zero())
            for i in range(6)
        ]
        linear = sum(coords, SparsePolynomial.zero())
        cubic = sum((coords[i] ** 3 * weights[i] for i in range(6)), SparsePolynomial.zero())
        key = "|".join(LETTERS[p].lower() + LETTERS[q].lower() for p, q in partition)
        report.results[key] = len(basis) >= 2 and linear.is_zero() and cubic.is_zero()
    return report


# --- 종합 검증 ---

@dataclass
class PlaneReport:
    """여섯 점 구성 하나에 대한 항등식 검증 결과"""
    cubic_sum_zero: bool = False       # a + ... + f = 0
    overline_sum_zero: bool = False    # ā + ... + f̄ = 0
    weighted_sum_zero: bool = False    # Σ ā·a = 0
    cube_sum_zero: bool = False        # Σ a³ = 0
    lines_on_surface: bool = False     # 15개 직선
    degree4_relation: bool = False     # a2² - 4a4 = 1296·d2²
    overline_identity: bool = False    # 라그랑주 항등식의 세 전개 일치
    d2: Optional[Fraction] = None

    @property
    def passed(self) -> bool:
        return all([
            self.cubic_sum_zero, self.overline_sum_zero, self.weighted_sum_zero, self.cube_sum_zero,
            self.lines_on_surface, self.degree4_relation, self.overline_identity,
        ])


# a2² - 4a4 와 d2² 의 비 (브래킷 (ijk) = det(p_i, p_j, p_k) 규약)
DEGREE4_RATIO = 1296


def degree4_relation_holds(result: CremonaResult, d2: Coordinate) -> bool:
    a2 = result.elementary_symmetric(2)
    a4 = result.elementary_symmetric(4)
    return a2 * a2 - 4 * a4 - DEGREE4_RATIO * d2 * d2 == 0


def verify_plane_configuration(config: PlaneConfig) -> PlaneReport:
    result = cremona_cubics(config)
    d2 = conic_invariant_d2(config)
    return PlaneReport(
        cubic_sum_zero=result.cubic_sum().is_zero(),
        overline_sum_zero=result.overline_sum() == 0,
        weighted_sum_zero=result.weighted_sum().is_zero(),
        cube_sum_zero=result.cube_sum().is_zero(),
        lines_on_surface=_check_lines(result.overlines).passed,
        degree4_relation=degree4_relation_holds(result, d2),
        overline_identity=overline_identity_check(config).passed,
        d2=d2,
    )


def six_plane_checks(trials: Optional[int] = None, seed: Optional[int] = None) -> pd.DataFrame:
    """무작위 유리수 구성 trials 개에 대한 검증표 (행: 시행)"""
    trials = trials if trials is not None else VERIFICATION_DEFAULTS["random_trials"]
    rng = make_rng(seed)
    records = []
    for trial in range(trials):
        report = verify_plane_configuration(PlaneConfig.random(rng))
        records.append({
            "trial": trial,
            "cubic_sum_zero": report.cubic_sum_zero,
            "overline_sum_zero": report.overline_sum_zero,
            "weighted_sum_zero": report.weighted_sum_zero,
            "cube_sum_zero": report.cube_sum_zero,
            "lines_on_surface": report.lines_on_surface,
            "degree4_relation": report.degree4_relation,
            "overline_identity": report.overline_identity,
            "passed": report.passed,
        })
    df = pd.DataFrame(records)
    failed = int((~df["passed"]).sum()) if trials else 0
    if failed:
        logger.warning(f"평면 여섯 점 검증 실패: {failed}/{trials}")
    else:
        logger.info(f"평면 여섯 점 검증 통과: {trials}회")
    return df
