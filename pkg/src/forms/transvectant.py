"""
초월변환(transvectant)과 고전 공변식 모듈

- 초월변환 (f, g)_n
- 아폴라 쌍 (apolarity pairing)
- 헤시안, 카탈렉티컨트, 사차 형식의 불변식 I, J
- 삼차 형식의 공변식 (Δ, H, Q) 과 시지지 36H³ + 9Δf² + Q² = 0
- 게라르델리 행렬식 전개
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple, Union
import logging

from config.settings import SYMBOL_NAMES
from src.algebra.algebra_utils import binomial
from src.algebra.linalg import determinant
from src.algebra.polynomial import SparsePolynomial, collapse
from src.forms.binary_form import BinaryForm

logger = logging.getLogger(__name__)


def _partial(poly: SparsePolynomial, nx: int, ny: int) -> SparsePolynomial:
    x, y = SYMBOL_NAMES["binary_variables"]
    for _ in range(nx):
        poly = poly.diff(x)
    for _ in range(ny):
        poly = poly.diff(y)
    return poly


def transvectant(f: BinaryForm, g: BinaryForm, n: int) -> BinaryForm:
    """(f, g)_n = Σ (-1)^i C(n,i) ∂ⁿf/∂x^(n-i)∂y^i · ∂ⁿg/∂x^i∂y^(n-i)

    Raises:
        ValueError: n 이 0 ~ min(deg f, deg g) 범위 밖
    """
    if n < 0 or n > min(f.degree, g.degree):
        raise ValueError(
            f"초월변환 차수 n={n}은 0 이상 min({f.degree}, {g.degree}) 이하여야 합니다."
        )
    F = f.to_polynomial()
    G = g.to_polynomial()
    result = SparsePolynomial.zero(F.variables)
    for i in range(n + 1):
        term = _partial(F, n - i, i) * _partial(G, i, n - i)
        coeff = binomial(n, i) * (-1) ** i
        result = result + term.scale(coeff)
    return BinaryForm.from_polynomial(result, f.degree + g.degree - 2 * n)


def apolarity_pairing(f: BinaryForm, g: BinaryForm) -> Union[Fraction, SparsePolynomial]:
    """Σ (-1)^i C(d,i) f_i g_(d-i)

    Raises:
        ValueError: 차수가 다른 경우
    """
    if f.degree != g.degree:
        raise ValueError(f"아폴라 쌍은 같은 차수의 형식에만 정의됩니다: {f.degree} vs {g.degree}")
    d = f.degree
    total = SparsePolynomial.zero()
    for i in range(d + 1):
        total = total + (f.coefficient(i) * g.coefficient(d - i)).scale(binomial(d, i) * (-1) ** i)
    return collapse(total)


def hessian(f: BinaryForm) -> BinaryForm:
    """고전 헤시안: (f,f)_2 / (2·(d(d-1))²)

    삼차 형식에서 (a0a2 - a1²)x² + (a0a3 - a1a2)xy + (a1a3 - a2²)y².

    Raises:
        ValueError: 차수 2 미만
    """
    d = f.degree
    if d < 2:
        raise ValueError(f"헤시안은 차수 2 이상의 형식에만 정의됩니다. (입력: {d})")
    return transvectant(f, f, 2).scale(Fraction(1, 2 * (d * (d - 1)) ** 2))


def catalecticant(f: BinaryForm) -> List[List[SparsePolynomial]]:
    """짝수 차수 형식의 한켈 행렬 M[i][j] = f_(i+j)

    Raises:
        ValueError: 홀수 차수
    """
    if f.degree % 2:
        raise ValueError(f"카탈렉티컨트는 짝수 차수 형식에만 정의됩니다. (입력: {f.degree})")
    k = f.degree // 2
    return [[f.coefficient(i + j) for j in range(k + 1)] for i in range(k + 1)]


def quartic_invariants(f: BinaryForm) -> Tuple[SparsePolynomial, SparsePolynomial]:
    """사차 형식의 (I, J)

    I = f0f4 - 4f1f3 + 3f2², J = 카탈렉티컨트 행렬식. (f,f)_4 = 1152·I.

    Raises:
        ValueError: 차수 4가 아닌 경우
    """
    if f.degree != 4:
        raise ValueError(f"사차 형식이 아닙니다. (차수: {f.degree})")
    a = f.coefficients
    I = a[0] * a[4] - 4 * a[1] * a[3] + 3 * a[2] * a[2]
    J = determinant(catalecticant(f))
    if not isinstance(J, SparsePolynomial):
        J = SparsePolynomial.constant(J)
    return I, J


# --- 이진 삼차 형식의 공변식 ---

@dataclass
class CubicCovariants:
    """이진 삼차 형식의 공변식 모음"""
    form: BinaryForm  # f
    discriminant: SparsePolynomial  # Δ (4차 불변식)
    hessian: BinaryForm  # H (2차 공변식, 위수 2)
    q_covariant: BinaryForm  # Q = (f, H)_1 (3차 공변식, 위수 3)
    syzygy: SparsePolynomial  # 36H³ + 9Δf² + Q² (항등적으로 0)

    @property
    def syzygy_holds(self) -> bool:
        return self.syzygy.is_zero()


def cubic_discriminant(f: BinaryForm) -> SparsePolynomial:
    """Δ = 4(a0a2 - a1²)(a1a3 - a2²) - (a0a3 - a1a2)²"""
    if f.degree != 3:
        raise ValueError(f"삼차 형식이 아닙니다. (차수: {f.degree})")
    a0, a1, a2, a3 = f.coefficients
    return 4 * (a0 * a2 - a1 * a1) * (a1 * a3 - a2 * a2) - (a0 * a3 - a1 * a2) ** 2


def cubic_covariant_suite(f: BinaryForm) -> CubicCovariants:
    """삼차 형식의 Δ, H, Q 와 시지지 다항식

    Raises:
        ValueError: 차수 3이 아닌 경우
    """
    if f.degree != 3:
        raise ValueError(f"삼차 형식이 아닙니다. (차수: {f.degree})")
    delta = cubic_discriminant(f)
    H = hessian(f)
    Q = transvectant(f, H, 1)
    Hp, Fp, Qp = H.to_polynomial(), f.to_polynomial(), Q.to_polynomial()
    syzygy = 36 * Hp ** 3 + 9 * delta * Fp ** 2 + Qp ** 2
    logger.info(f"삼차 공변식 계산 완료: 시지지 항 수 {len(syzygy)}")
    return CubicCovariants(f, delta, H, Q, syzygy)


# --- 게라르델리 행렬식 ---

@dataclass
class GherardelliExpansion:
    """t-행렬식 전개 결과"""
    determinant: SparsePolynomial  # t와 계수의 다항식
    coefficients: Dict[int, SparsePolynomial]  # t^k 계수 (k = 0..3)


def gherardelli_determinant(f: BinaryForm) -> GherardelliExpansion:
    """det [[a0, a1, a2+t], [a1, a2-t/2, a3], [a2+t, a3, a4]] 의 t 전개

    검증된 전개: t³/2 - (I/2)·t + J.

    Raises:
        ValueError: 차수 4가 아닌 경우
    """
    if f.degree != 4:
        raise ValueError(f"사차 형식이 아닙니다. (차수: {f.degree})")
    t = SparsePolynomial.variable(SYMBOL_NAMES["series_variable"])
    a0, a1, a2, a3, a4 = f.coefficients
    matrix = [
        [a0, a1, a2 + t],
        [a1, a2 - t / 2, a3],
        [a2 + t, a3, a4],
    ]
    det = determinant(matrix)
    name = t.variables[0]
    coefficients = {k: det.coefficient_of((name,), (k,)) for k in range(4)}
    return GherardelliExpansion(det, coefficients)
