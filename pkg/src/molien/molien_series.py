"""
몰리엔 급수 모듈

켤레류마다 뉴턴 항등식으로 det(1 - t·g) 를 복원하고,
그 역급수를 켤레류 크기로 가중 평균합니다.
"""
from fractions import Fraction
from typing import List, Optional, Sequence
import logging

from config.settings import SYMBOL_NAMES, resolve_truncation
from src.algebra.polynomial import SparsePolynomial
from src.algebra.series import TruncatedSeries
from src.molien.groups import GroupData, RepresentationCharacter, SubgroupMode

logger = logging.getLogger(__name__)


def charpoly_from_power_traces(traces: Sequence) -> List[Fraction]:
    """tr(g), tr(g²), ..., tr(g^n) → [e0=1, e1, ..., en]

    k·e_k = Σ_{i=1..k} (-1)^(i-1) e_(k-i) p_i
    """
    e = [Fraction(1)]
    for k in range(1, len(traces) + 1):
        total = sum((-1) ** (i - 1) * e[k - i] * Fraction(traces[i - 1]) for i in range(1, k + 1))
        e.append(total / k)
    return e


def det_one_minus(elementary: Sequence[Fraction]) -> SparsePolynomial:
    """det(1 - t·g) = Σ (-1)^i e_i t^i"""
    t = SYMBOL_NAMES["series_variable"]
    return SparsePolynomial((t,), {(i, ): (-1) ** i * c for i, c in enumerate(elementary) if c})


def _check_rep(rep: RepresentationCharacter, group: GroupData):
    if len(rep.values) != len(group.classes):
        raise ValueError(
            f"표현 {rep.name} 의 지표값 {len(rep.values)}개가 {group.name} 켤레류 {len(group.classes)}개와 맞지 않습니다."
        )
    if rep.dimension <= 0:
        raise ValueError(f"항등원에서의 지표값(차원)이 양수가 아닙니다: {rep.dimension}")


def class_charpoly(rep: RepresentationCharacter, group: GroupData, index: int) -> SparsePolynomial:
    """켤레류 index 원소의 det(1 - t·g)"""
    n = rep.dimension
    traces = [rep.values[group.power_class(index, k)] for k in range(1, n + 1)]
    return det_one_minus(charpoly_from_power_traces(traces))


def molien_series(
    rep: RepresentationCharacter,
    group: GroupData,
    subgroup: SubgroupMode = SubgroupMode.FULL,
    truncation: Optional[int] = None
) -> TruncatedSeries:
    """(1/|G'|) Σ_classes size·det(1 - t·g)^(-1)

    Raises:
        ValueError: 표현과 군 데이터의 차원/켤레류 수 불일치
    """
    _check_rep(rep, group)
    truncation = resolve_truncation(truncation)
    indices = group.class_indices(subgroup)
    order = group.subgroup_order(subgroup)
    t = SYMBOL_NAMES["series_variable"]
    total = TruncatedSeries(SparsePolynomial.zero((t,)), truncation)
    for idx in indices:
        charpoly = class_charpoly(rep, group, idx)
        inverse = TruncatedSeries(charpoly, truncation).inverse()
        total = total + inverse * group.classes[idx].size
    logger.info(f"몰리엔 급수 계산 완료: {group.name}/{rep.name} ({subgroup.value}), |G'|={order}, N={truncation}")
    return total * Fraction(1, order)


def sym_power_character(rep: RepresentationCharacter, group: GroupData, k: int) -> RepresentationCharacter:
    """S^k W 의 지표 (k <= 3)

    χ_{S²}(g) = (χ(g)² + χ(g²)) / 2
    χ_{S³}(g) = χ(g)³/6 + χ(g)χ(g²)/2 + χ(g³)/3

    Raises:
        ValueError: k 가 1~3 범위 밖
    """
    _check_rep(rep, group)
    if k < 1 or k > 3:
        raise ValueError(f"대칭 거듭제곱 지표는 k = 1, 2, 3 만 지원합니다. (입력: {k})")
    if k == 1:
        return rep
    chi = rep.values
    values = []
    for idx in range(len(group.classes)):
        a = Fraction(chi[idx])
        b = Fraction(chi[group.power_class(idx, 2)])
        if k == 2:
            value = (a * a + b) / 2
        else:
            c = Fraction(chi[group.power_class(idx, 3)])
            value = a ** 3 / 6 + a * b / 2 + c / 3
        if value.denominator != 1:
            raise ValueError(f"정수가 아닌 지표값이 나왔습니다: {group.classes[idx].name} → {value}")
        values.append(int(value))
    return RepresentationCharacter(f"S{k}({rep.name})", tuple(values))


def molien_multiplicity(
    rep: RepresentationCharacter,
    group: GroupData,
    k: int,
    subgroup: SubgroupMode = SubgroupMode.FULL
) -> int:
    """dim (S^k W)^G' = (1/|G'|) Σ size·χ_{S^k W}(g)"""
    if k == 0:
        return 1
    chi = sym_power_character(rep, group, k)
    indices = group.class_indices(subgroup)
    total = sum(group.classes[i].size * chi.values[i] for i in indices)
    value = Fraction(total, group.subgroup_order(subgroup))
    if value.denominator != 1:
        raise ValueError(f"불변 부분공간 차원이 정수가 아닙니다: {value}")
    return int(value)
