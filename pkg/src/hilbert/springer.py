"""
스프링거-브리옹 힐베르트 급수 모듈

F_M(z) = Σ_{0<=j<d/2} (-1)^j Φ_(d-2j)((1 - z²) z^e γ_(d,j)(z))
를 절단 급수로 전개합니다. Φ 적용 전 전개는 d·N 차까지 수행합니다.
"""
from typing import Optional
import logging

import pandas as pd

from config.settings import SYMBOL_NAMES, resolve_truncation
from src.algebra.polynomial import SparsePolynomial
from src.algebra.series import TruncatedSeries, one_minus, rational_series

logger = logging.getLogger(__name__)


def phi_j(series: TruncatedSeries, j: int, variable: Optional[str] = None) -> TruncatedSeries:
    """Φ_j(z^n) = z^(n/j) (j | n), 그 외 0

    Raises:
        ValueError: j <= 0
    """
    return series.phi(j, variable)


def gamma_series(d: int, j: int, truncation: int) -> TruncatedSeries:
    """γ_(d,j)(z) = z^(j(j+1)) / (Π_{k=1..j}(1 - z^2k) · Π_{l=1..d-j}(1 - z^2l))"""
    z = SYMBOL_NAMES["springer_variables"][0]
    factors = [one_minus({z: 2 * k}) for k in range(1, j + 1)]
    factors += [one_minus({z: 2 * l}) for l in range(1, d - j + 1)]
    numerator = SparsePolynomial.monomial((z,), (j * (j + 1),))
    return rational_series(numerator, factors, truncation)


def _check_degree(d: int):
    if d < 1:
        raise ValueError(f"형식 차수는 1 이상이어야 합니다. (입력: {d})")


def springer_covariant_series(d: int, e: int = 0, truncation: Optional[int] = None) -> TruncatedSeries:
    """S^e 성분 공변식의 힐베르트 급수 F_M(z) (e = 0 이면 불변식 환)

    Raises:
        ValueError: d < 1 또는 e < 0
    """
    _check_degree(d)
    if e < 0:
        raise ValueError(f"위수 e 는 0 이상이어야 합니다. (입력: {e})")
    truncation = resolve_truncation(truncation)
    z = SYMBOL_NAMES["springer_variables"][0]
    inner_truncation = d * (truncation + e) + e
    prefactor = SparsePolynomial((z,), {(e,): 1, (e + 2,): -1})
    total = TruncatedSeries(SparsePolynomial.zero((z,)), truncation)
    for j in range((d + 1) // 2):
        if 2 * j >= d:
            break
        inner = gamma_series(d, j, inner_truncation) * prefactor
        term = phi_j(inner, d - 2 * j, z).truncate(truncation)
        total = total + (term if j % 2 == 0 else -term)
    logger.info(f"스프링거 급수 계산 완료: d={d}, e={e}, N={truncation}")
    return total


def springer_bigraded(d: int, truncation: Optional[int] = None) -> TruncatedSeries:
    """F_d(z, w) = Σ_j (-1)^j Φ_(d-2j)((1 - z²)/(1 - zw) · γ_(d,j)(z)) (Φ 는 z 에만 작용)

    z^g w^e 계수 = 차수 g, 위수 e 공변식의 개수.
    """
    _check_degree(d)
    truncation = resolve_truncation(truncation)
    z, w = SYMBOL_NAMES["springer_variables"]
    inner_truncation = d * truncation
    prefactor = rational_series(one_minus({z: 2}), [one_minus({z: 1, w: 1})], inner_truncation)
    total = TruncatedSeries(SparsePolynomial.zero((z, w)), truncation)
    for j in range((d + 1) // 2):
        if 2 * j >= d:
            break
        inner = gamma_series(d, j, inner_truncation) * prefactor
        term = phi_j(inner, d - 2 * j, z).truncate(truncation)
        total = total + (term if j % 2 == 0 else -term)
    logger.info(f"이중 차수 스프링거 급수 계산 완료: d={d}, N={truncation}")
    return total


def covariant_table(d: int, max_degree: int, max_order: Optional[int] = None) -> pd.DataFrame:
    """공변식 개수표 (행: 차수 g, 열: 위수 e)"""
    if max_order is None:
        max_order = d * max_degree
    z, w = SYMBOL_NAMES["springer_variables"]
    series = springer_bigraded(d, max_degree + max_order)
    data = {
        e: [int(series.coefficient({z: g, w: e})) for g in range(1, max_degree + 1)]
        for e in range(max_order + 1)
    }
    df = pd.DataFrame(data, index=pd.Index(range(1, max_degree + 1), name="degree"))
    df.columns.name = "order"
    return df
