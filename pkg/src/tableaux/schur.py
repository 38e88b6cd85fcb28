"""
슈어 다항식과 플레티즘 분해 모듈

반표준 타블로 열거로 슈어 다항식을 만들고,
대칭 다항식을 선두항 소거로 슈어 다항식의 합으로 분해합니다.
"""
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Sequence, Tuple, Union
import logging

import pandas as pd

from src.algebra.algebra_utils import compositions
from src.algebra.polynomial import SparsePolynomial
from src.tableaux.young import YoungDiagram, semistandard_tableaux

logger = logging.getLogger(__name__)

Partition = Tuple[int, ...]


def character_variables(n: int) -> Tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


def schur_polynomial(shape: Union[YoungDiagram, Sequence[int]], n: int) -> SparsePolynomial:
    """s_λ(x1, ..., xn) = Σ_{반표준 T, 항목 <= n} x^T"""
    variables = character_variables(n)
    diagram = YoungDiagram.of(shape)
    if diagram.n_rows > n:
        return SparsePolynomial.zero(variables)
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for tableau in semistandard_tableaux(diagram, max_label=n):
        content = tableau.content()
        exps = tuple(content.get(i, 0) for i in range(1, n + 1))
        terms[exps] = terms.get(exps, Fraction(0)) + 1
    return SparsePolynomial(variables, terms)


def schur_dimension(shape: Union[YoungDiagram, Sequence[int]], n: int) -> int:
    """dim S^λ C^n = 항목 <= n 인 반표준 타블로 개수"""
    return len(semistandard_tableaux(YoungDiagram.of(shape), max_label=n))


def plethysm_character(m: int, d: int, n: int) -> SparsePolynomial:
    """S^m(S^d C^n) 의 지표 (x1..xn 의 대칭 다항식)"""
    variables = character_variables(n)
    weights = compositions(d, n)
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for multiset in combinations_with_replacement(weights, m):
        exps = tuple(sum(w[i] for w in multiset) for i in range(n))
        terms[exps] = terms.get(exps, Fraction(0)) + 1
    return SparsePolynomial(variables, terms)


def _is_symmetric(poly: SparsePolynomial) -> bool:
    n = len(poly.variables)
    for i in range(n - 1):
        swapped = {}
        for exps, c in poly.terms.items():
            e = list(exps)
            e[i], e[i + 1] = e[i + 1], e[i]
            swapped[tuple(e)] = c
        if swapped != poly.terms:
            return False
    return True


def schur_decompose(poly: SparsePolynomial) -> Dict[Partition, int]:
    """대칭 다항식 = Σ c_λ s_λ 의 GL 분할별 중복도 (선두항 소거)

    Raises:
        ValueError: 대칭이 아니거나 음/비정수 중복도가 나오는 경우
    """
    n = len(poly.variables)
    if not _is_symmetric(poly):
        raise ValueError(f"변수 치환에 대해 대칭인 다항식이 아닙니다: {poly}")
    remainder = poly
    result: Dict[Partition, int] = {}
    while not remainder.is_zero():
        exps, coeff = remainder.leading_term()
        if coeff < 0 or coeff.denominator != 1:
            raise ValueError(f"지표가 아닌 입력입니다: 분할 {exps} 의 중복도 {coeff}")
        partition = tuple(e for e in exps if e)
        result[partition] = int(coeff)
        remainder = remainder - schur_polynomial(partition, n).with_variables(poly.variables).scale(coeff)
    logger.info(f"슈어 분해 완료: {len(result)}개 성분")
    return dict(sorted(result.items(), reverse=True))


def sl_partition(partition: Sequence[int], n: int) -> Partition:
    """SL(n) 표지: 길이 n 인 열을 제거 (자명 표현은 (0,))"""
    parts = list(partition) + [0] * max(0, n - len(partition))
    if len(parts) > n:
        raise ValueError(f"{n}행을 넘는 분할은 SL({n}) 표현이 아닙니다: {tuple(partition)}")
    base = parts[n - 1]
    stripped = tuple(p - base for p in parts if p - base)
    return stripped or (0,)


def sl_decompose(poly: SparsePolynomial) -> Dict[Partition, int]:
    """schur_decompose 결과를 SL(n) 표지로 모음"""
    n = len(poly.variables)
    result: Dict[Partition, int] = {}
    for partition, mult in schur_decompose(poly).items():
        key = sl_partition(partition, n)
        result[key] = result.get(key, 0) + mult
    return result


def plethysm_table_df(m: int, d: int, n: int) -> pd.DataFrame:
    """S^m(S^d C^n) 분해표 (GL 분할, SL 표지, 중복도, 차원)"""
    records: List[Dict] = []
    for partition, mult in schur_decompose(plethysm_character(m, d, n)).items():
        records.append({
            "partition": partition,
            "sl_label": sl_partition(partition, n),
            "multiplicity": mult,
            "dimension": schur_dimension(partition, n),
        })
    return pd.DataFrame(records)
