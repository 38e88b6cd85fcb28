"""
불변식 개수 세기 모듈

- 케일리-실베스터 가우스 이항 다항식과 이진 불변식/공변식 개수
- 삼진 가중치 열거 급수와 베드라튝 6항 공식
- 분할 수 급수, 에르미트 상반성
- 직선 위 d개 점의 하우(Howe) 공식
"""
from fractions import Fraction
from typing import Dict, List
import logging

import pandas as pd

from config.settings import SYMBOL_NAMES, resolve_truncation
from src.algebra.algebra_utils import binomial
from src.algebra.polynomial import SparsePolynomial, univariate_exact_divide
from src.algebra.series import TruncatedSeries, series_inverse_factor

logger = logging.getLogger(__name__)

_X = "x"


def _one_minus_power(k: int) -> SparsePolynomial:
    return SparsePolynomial((_X,), {(0,): 1, (k,): -1})


def cayley_sylvester_polynomial(d: int, g: int) -> SparsePolynomial:
    """Π_{i=1..g} (1 - x^(d+i)) / (1 - x^i) (차수 dg 다항식, x^p 계수 = dim H_{g,p,d})

    Raises:
        ValueError: d 또는 g 가 음수
    """
    if d < 0 or g < 0:
        raise ValueError(f"d, g 는 0 이상이어야 합니다. (d={d}, g={g})")
    result = SparsePolynomial.constant(1, (_X,))
    for i in range(1, g + 1):
        result = univariate_exact_divide(result * _one_minus_power(d + i), _one_minus_power(i))
    return result.with_variables((_X,))


def weight_space_dims(d: int, g: int) -> List[int]:
    """[H_{g,0,d}, ..., H_{g,dg,d}]"""
    poly = cayley_sylvester_polynomial(d, g)
    return [int(poly.coefficient({_X: p})) for p in range(d * g + 1)]


def binary_invariant_dim(d: int, g: int) -> int:
    """(1 - x)·CS 의 dg/2 차 계수 (dg 홀수이면 0)"""
    if (d * g) % 2:
        return 0
    dims = weight_space_dims(d, g)
    p = d * g // 2
    return dims[p] - (dims[p - 1] if p > 0 else 0)


def covariant_multiplicities(d: int, g: int) -> Dict[int, int]:
    """S^g(S^d C²) 안의 S^e 중복도 {e: 중복도} (e 내림차순)"""
    dims = weight_space_dims(d, g)
    result: Dict[int, int] = {}
    for e in range(d * g, -1, -2):
        k = (d * g - e) // 2
        mult = dims[k] - (dims[k - 1] if k > 0 else 0)
        if mult:
            result[e] = mult
    return result


def partition_count_series(truncation: int) -> TruncatedSeries:
    """Π_{i>=1} 1/(1 - x^i) 의 절단 전개"""
    result = TruncatedSeries.one((_X,), truncation)
    for i in range(1, truncation + 1):
        result = result * series_inverse_factor({_X: i}, truncation)
    return result


def hermite_reciprocity(d: int, g: int) -> bool:
    """모든 p 에 대해 H_{g,p,d} = H_{d,p,g}"""
    return cayley_sylvester_polynomial(d, g) == cayley_sylvester_polynomial(g, d)


# --- 삼진 형식: 가중치 열거와 베드라튝 공식 ---

def ternary_weight_enumerator(d: int, max_degree: int) -> TruncatedSeries:
    """Π_{i1+i2<=d} 1/(1 - x1^i1 x2^i2 y) 의 전개

    y 차수 max_degree 이하의 계수가 모두 정확하도록 총차수 (d+1)·max_degree 에서 절단합니다.
    x1^p1 x2^p2 y^g 계수 = dim H_{g,d,(dg-p1-p2),p1,p2}.
    """
    x1, x2, y = SYMBOL_NAMES["bedratyuk_variables"]
    truncation = (d + 1) * max_degree
    result = TruncatedSeries.one((x1, x2, y), truncation)
    for i1 in range(d + 1):
        for i2 in range(d - i1 + 1):
            exps = {x1: i1, x2: i2, y: 1}
            result = result * series_inverse_factor(exps, truncation)
    logger.debug(f"삼진 가중치 열거 급수: d={d}, 최대 차수 {max_degree}, 항 {len(result.terms)}개")
    return result


def bedratyuk_h(enumerator: TruncatedSeries, d: int, g: int, p0: int, p1: int, p2: int) -> int:
    """h_{g,d,p0,p1,p2} (가중치 단체 밖이면 0)"""
    if min(p0, p1, p2) < 0 or p0 + p1 + p2 != d * g:
        return 0
    x1, x2, y = SYMBOL_NAMES["bedratyuk_variables"]
    return int(enumerator.coefficient({x1: p1, x2: p2, y: g}))


def bedratyuk_invariant_dim(d: int, g: int, enumerator: TruncatedSeries = None) -> int:
    """베드라튝 6항 공식 (3 ∤ dg 이면 0)

    h(p,p,p) - h(p+1,p-1,p) - h(p-1,p,p+1) + h(p+1,p-2,p+1) + h(p-1,p-1,p+2) - h(p,p-2,p+2)
    """
    if (d * g) % 3:
        return 0
    if g == 0:
        return 1
    if enumerator is None:
        enumerator = ternary_weight_enumerator(d, g)
    p = d * g // 3

    def h(a: int, b: int, c: int) -> int:
        return bedratyuk_h(enumerator, d, g, a, b, c)

    return (
        h(p, p, p) - h(p + 1, p - 1, p) - h(p - 1, p, p + 1)
        + h(p + 1, p - 2, p + 1) + h(p - 1, p - 1, p + 2) - h(p, p - 2, p + 2)
    )


def bedratyuk_table(d: int, g: int) -> pd.DataFrame:
    """가중치 삼각형 위의 h(p0, p1, p2) 표"""
    enumerator = ternary_weight_enumerator(d, g)
    records = []
    for p1 in range(d * g + 1):
        for p2 in range(d * g - p1 + 1):
            p0 = d * g - p1 - p2
            records.append({"p0": p0, "p1": p1, "p2": p2, "h": bedratyuk_h(enumerator, d, g, p0, p1, p2)})
    df = pd.DataFrame(records)
    logger.info(f"베드라튝 표 생성: d={d}, g={g}, 합계 {df['h'].sum()}")
    return df


# --- 하우 공식 ---

def howe_dimension(d: int, k: int) -> int:
    """Σ_{j=0}^{⌊(d-1)/2⌋} (-1)^j C(d,j) C(k(d/2-j)+d-2-j, d-2)

    Raises:
        ValueError: d 가 홀수인데 k 가 홀수인 경우, d < 2 또는 k < 0
    """
    if d < 2 or k < 0:
        raise ValueError(f"하우 공식은 d >= 2, k >= 0 에서 정의됩니다. (d={d}, k={k})")
    if d % 2 and k % 2:
        raise ValueError(f"d={d} 가 홀수이면 k 는 짝수여야 합니다. (입력 k={k})")
    total = 0
    for j in range((d - 1) // 2 + 1):
        top = Fraction(k * (d - 2 * j), 2) + d - 2 - j
        total += (-1) ** j * binomial(d, j) * binomial(int(top), d - 2)
    return total


def howe_series(d: int, truncation: int = None) -> TruncatedSeries:
    """Σ_k howe_dimension(d, k) t^k (d 가 홀수이면 짝수 k 만)"""
    truncation = resolve_truncation(truncation)
    t = SYMBOL_NAMES["series_variable"]
    terms = {}
    for k in range(truncation + 1):
        if d % 2 and k % 2:
            continue
        value = howe_dimension(d, k)
        if value:
            terms[(k,)] = value
    return TruncatedSeries(SparsePolynomial((t,), terms), truncation)
