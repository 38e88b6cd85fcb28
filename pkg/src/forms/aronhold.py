"""
아론홀드 불변식 모듈

삼진 삼차 형식 φ 에 대해 End₀W (대각합 0 자기준동형, 8차원) 위의
교대 쌍선형형식 B_φ(M, N) 을 만들고 그 파피안으로 아론홀드 불변식을 계산합니다.
사차 형식의 극(polar) 삼차 형식과 스코르차 사차 형식도 제공합니다.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union
import logging

from config.settings import SYMBOL_NAMES
from src.algebra.linalg import determinant, pfaffian
from src.algebra.polynomial import SparsePolynomial, collapse
from src.forms.ternary_form import (
    Coefficient,
    TernaryForm,
    ternary_indices,
    ternary_invariant_basis,
)

logger = logging.getLogger(__name__)

# 축약에 쓰는 보조 벡터 변수 (형식 변수 x0..x2 와 구분)
_AUX_VARIABLES = ("v0", "v1", "v2")


@dataclass(frozen=True)
class TraceFreeEndomorphism:
    """대각합 0 인 3×3 행렬"""
    label: str  # 기저 이름 (예: E01, E00-E11)
    matrix: Tuple[Tuple[int, int, int], ...]  # 성분

    def __post_init__(self):
        if sum(self.matrix[i][i] for i in range(3)) != 0:
            raise ValueError(f"대각합이 0이 아닌 행렬입니다: {self.label}")

    def apply(self, vector: Sequence[SparsePolynomial]) -> List[SparsePolynomial]:
        return [
            sum((vector[j] * self.matrix[i][j] for j in range(3) if self.matrix[i][j]),
                SparsePolynomial.zero())
            for i in range(3)
        ]


def _elementary(entries: Dict[Tuple[int, int], int], label: str) -> TraceFreeEndomorphism:
    rows = [[0] * 3 for _ in range(3)]
    for (i, j), value in entries.items():
        rows[i][j] = value
    return TraceFreeEndomorphism(label, tuple(tuple(r) for r in rows))


# End₀ 기저 순서 (파피안 부호가 이 순서에 의존)
END0_BASIS: Tuple[TraceFreeEndomorphism, ...] = (
    _elementary({(0, 1): 1}, "E01"),
    _elementary({(0, 2): 1}, "E02"),
    _elementary({(1, 0): 1}, "E10"),
    _elementary({(1, 2): 1}, "E12"),
    _elementary({(2, 0): 1}, "E20"),
    _elementary({(2, 1): 1}, "E21"),
    _elementary({(0, 0): 1, (1, 1): -1}, "E00-E11"),
    _elementary({(1, 1): 1, (2, 2): -1}, "E11-E22"),
)


def _contract_cubic(poly: SparsePolynomial, phi: TernaryForm) -> SparsePolynomial:
    """v 에 대한 삼차식에서 v^α ↦ φ_α 치환"""
    aligned_vars = _AUX_VARIABLES
    result = SparsePolynomial.zero()
    for alpha in ternary_indices(3):
        c = poly.coefficient_of(aligned_vars, alpha)
        if c:
            result = result + c * phi.coefficient(alpha)
    return result


def aronhold_matrix(phi: TernaryForm) -> List[List[SparsePolynomial]]:
    """B_φ(M_i, M_j) 의 8×8 교대 행렬

    v³ 에 대해 B(M, N) = det(Mv, v, Nv) 이고 φ 로 선형 확장합니다.

    Raises:
        ValueError: 삼차 형식이 아닌 경우
    """
    if phi.degree != 3:
        raise ValueError(f"삼차 형식이 아닙니다. (차수: {phi.degree})")
    v = [SparsePolynomial.variable(name) for name in _AUX_VARIABLES]
    images = [basis.apply(v) for basis in END0_BASIS]
    n = len(END0_BASIS)
    matrix: List[List[SparsePolynomial]] = [[SparsePolynomial.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            cubic = determinant([images[i], v, images[j]])
            entry = _contract_cubic(cubic, phi)
            matrix[i][j] = entry
            matrix[j][i] = -entry
    return matrix


def aronhold_pfaffian(phi: TernaryForm) -> Union[Fraction, SparsePolynomial]:
    """8×8 교대 행렬의 파피안 (아론홀드 불변식의 상수배)

    Raises:
        ValueError: 삼차 형식이 아닌 경우
    """
    value = pfaffian(aronhold_matrix(phi))
    if isinstance(value, SparsePolynomial):
        return collapse(value)
    return value


def aronhold_invariant() -> SparsePolynomial:
    """커널 방법으로 얻은 25항 아론홀드 불변식 (선두 계수 1)"""
    basis = ternary_invariant_basis(3, 4)
    if len(basis) != 1:
        raise RuntimeError(f"삼차 형식의 4차 불변식 공간 차원이 1이 아닙니다: {len(basis)}")
    return basis[0]


def polar_cubic(F: TernaryForm, x: Sequence[Coefficient]) -> TernaryForm:
    """사차 형식의 극 삼차 형식 P_x(F)_β = 4 Σ_i x_i F_(β+e_i)

    Σ x_i ∂F/∂x_i 와 같습니다 (1/4 정규화 없음).

    Raises:
        ValueError: 사차 형식이 아니거나 점의 좌표가 3개가 아닌 경우
    """
    if F.degree != 4:
        raise ValueError(f"사차 형식이 아닙니다. (차수: {F.degree})")
    if len(x) != 3:
        raise ValueError(f"점의 좌표는 3개여야 합니다. (입력: {len(x)}개)")
    coefficients = []
    for beta in ternary_indices(3):
        total = SparsePolynomial.zero()
        for i in range(3):
            shifted = list(beta)
            shifted[i] += 1
            total = total + F.coefficient(shifted) * x[i]
        coefficients.append(total * 4)
    return TernaryForm(3, tuple(coefficients))


def scorza_quartic(F: TernaryForm) -> TernaryForm:
    """스코르차 사차 형식 x ↦ Ar(P_x(F))

    Raises:
        ValueError: 사차 형식이 아닌 경우
    """
    xs = [SparsePolynomial.variable(name) for name in SYMBOL_NAMES["ternary_variables"]]
    value = pfaffian(aronhold_matrix(polar_cubic(F, xs)))
    if not isinstance(value, SparsePolynomial):
        value = SparsePolynomial.constant(value)
    logger.info(f"스코르차 사차 형식 계산 완료: 항 {len(value)}개")
    return TernaryForm.from_polynomial(value, 4)
