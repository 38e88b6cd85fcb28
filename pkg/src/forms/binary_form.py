"""
이진 형식 모듈

f = Σ C(d,i) f_i x^(d-i) y^i 규약의 이진 형식과
가중 단항식 공간, 연산자 D/Δ, 커널 방법 불변식, 레이놀즈 사영을 제공합니다.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union
import logging

from config.settings import SYMBOL_NAMES
from src.algebra.algebra_utils import binomial
from src.algebra.linalg import ExactMatrix, kernel_basis, solve
from src.algebra.polynomial import (
    Exponent,
    Scalar,
    SparsePolynomial,
    linear_derivation,
    to_fraction,
)

logger = logging.getLogger(__name__)

Coefficient = Union[SparsePolynomial, Scalar]


def binary_coefficient_names(d: int) -> Tuple[str, ...]:
    """계수 미지수 이름 a0 ... ad"""
    prefix = SYMBOL_NAMES["binary_coefficient"]
    return tuple(f"{prefix}{i}" for i in range(d + 1))


def _as_polynomial(value: Coefficient) -> SparsePolynomial:
    if isinstance(value, SparsePolynomial):
        return value
    return SparsePolynomial.constant(value)


@dataclass(frozen=True)
class BinaryForm:
    """이항계수 규약의 이진 형식"""
    degree: int  # 차수 d
    coefficients: Tuple[SparsePolynomial, ...]  # f_0 ... f_d

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"형식의 차수는 0 이상이어야 합니다. (입력: {self.degree})")
        if len(self.coefficients) != self.degree + 1:
            raise ValueError(
                f"차수 {self.degree} 형식은 계수 {self.degree + 1}개가 필요합니다. (입력: {len(self.coefficients)}개)"
            )
        object.__setattr__(self, "coefficients", tuple(_as_polynomial(c) for c in self.coefficients))

    @classmethod
    def symbolic(cls, d: int) -> "BinaryForm":
        """계수가 미지수 a0 ... ad 인 일반 형식"""
        return cls(d, tuple(SparsePolynomial.variable(name) for name in binary_coefficient_names(d)))

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[Coefficient]) -> "BinaryForm":
        return cls(len(coefficients) - 1, tuple(coefficients))

    @classmethod
    def from_polynomial(cls, poly: SparsePolynomial, degree: int) -> "BinaryForm":
        """x, y에 대한 동차 다항식에서 f_i = (x^(d-i) y^i 계수) / C(d,i) 를 추출

        Raises:
            ValueError: x, y에 대해 차수 degree의 동차식이 아닌 경우
        """
        x, y = SYMBOL_NAMES["binary_variables"]
        if not poly.is_homogeneous((x, y)) or (poly and _xy_degree(poly, x, y) != degree):
            raise ValueError(f"x, y에 대한 {degree}차 동차 다항식이 아닙니다: {poly}")
        coefficients = tuple(
            poly.coefficient_of((x, y), (degree - i, i)) / binomial(degree, i) for i in range(degree + 1)
        )
        return cls(degree, coefficients)

    def coefficient(self, i: int) -> SparsePolynomial:
        return self.coefficients[i]

    def to_polynomial(self) -> SparsePolynomial:
        """x, y와 계수 미지수에 대한 다항식"""
        x, y = SYMBOL_NAMES["binary_variables"]
        d = self.degree
        result = SparsePolynomial.zero((x, y))
        for i, c in enumerate(self.coefficients):
            if c:
                result = result + c * SparsePolynomial.monomial((x, y), (d - i, i), binomial(d, i))
        return result

    def evaluate(self, x: Coefficient, y: Coefficient) -> SparsePolynomial:
        xs, ys = SYMBOL_NAMES["binary_variables"]
        return self.to_polynomial().substitute({xs: x, ys: y})

    def coefficient_map(self) -> Dict[str, SparsePolynomial]:
        """계수 미지수 이름 → 계수"""
        return dict(zip(binary_coefficient_names(self.degree), self.coefficients))

    def substitute_coefficients(self, mapping: Dict[str, Coefficient]) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(c.substitute(mapping) for c in self.coefficients))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients)

    def scale(self, scalar: Scalar) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(c.scale(scalar) for c in self.coefficients))

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError(f"차수가 다른 형식은 더할 수 없습니다: {self.degree} vs {other.degree}")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and all(
            a == b for a, b in zip(self.coefficients, other.coefficients)
        )

    __hash__ = None

    def __str__(self) -> str:
        return str(self.to_polynomial())


def _xy_degree(poly: SparsePolynomial, x: str, y: str) -> int:
    exps, _ = next(iter(poly.terms.items()))
    return sum(e for v, e in zip(poly.variables, exps) if v in (x, y))


def power_form(l: Sequence[Coefficient], d: int) -> BinaryForm:
    """l^d 의 계수 (f_i = l0^(d-i) l1^i)"""
    if len(l) != 2:
        raise ValueError(f"이진 일차형식은 계수 2개가 필요합니다. (입력: {len(l)}개)")
    l0, l1 = (_as_polynomial(c) for c in l)
    return BinaryForm(d, tuple((l0 ** (d - i)) * (l1 ** i) for i in range(d + 1)))


# --- 가중 단항식 공간 ---

@dataclass(frozen=True)
class WeightedMonomialSpace:
    """차수 g, 가중치 p 인 a0...ad 단항식 공간"""
    d: int  # 형식 차수
    g: int  # 단항식 차수
    weight: Optional[int]  # 가중치 p (dg 홀수이면 None)
    basis: Tuple[Exponent, ...] = field(default_factory=tuple)  # 지수 벡터 (사전식 내림차순)

    @property
    def variables(self) -> Tuple[str, ...]:
        return binary_coefficient_names(self.d)

    def __len__(self) -> int:
        return len(self.basis)

    def monomials(self) -> List[SparsePolynomial]:
        return [SparsePolynomial._raw(self.variables, {e: Fraction(1)}) for e in self.basis]


def weighted_exponents(d: int, g: int, p: int) -> List[Exponent]:
    """Σν_i = g, Σ i·ν_i = p 인 지수 벡터 (사전식 내림차순)"""
    result: List[Exponent] = []

    def rec(i: int, remaining: int, weight: int, prefix: Tuple[int, ...]):
        if i == d:
            if remaining * d == weight:
                result.append(prefix + (remaining,))
            return
        # 남은 remaining개를 인덱스 i..d 에 배치할 때 가능한 가중치 범위
        for n in range(remaining, -1, -1):
            rest = remaining - n
            w = weight - n * i
            if w < rest * (i + 1) or w > rest * d:
                continue
            rec(i + 1, rest, w, prefix + (n,))

    if g < 0 or p < 0 or p > d * g:
        return []
    if d == 0:
        return [(g,)] if p == 0 else []
    rec(0, g, p, ())
    return result


def isobaric_monomials(d: int, g: int) -> WeightedMonomialSpace:
    """가중치 dg/2 의 등가중 단항식 공간 (dg 홀수이면 빈 공간)"""
    if (d * g) % 2:
        return WeightedMonomialSpace(d, g, None, ())
    p = d * g // 2
    return WeightedMonomialSpace(d, g, p, tuple(weighted_exponents(d, g, p)))


# --- 연산자 D, Δ ---

def apply_D(poly: SparsePolynomial, d: int) -> SparsePolynomial:
    """D = Σ (i+1) a_i ∂/∂a_(i+1) (가중치 1 감소)

    Raises:
        ValueError: a0...ad 이외의 변수 포함
    """
    rules = [(i + 1, i, i + 1) for i in range(d)]
    return linear_derivation(poly, binary_coefficient_names(d), rules)


def apply_Delta(poly: SparsePolynomial, d: int) -> SparsePolynomial:
    """Δ = Σ (d-i) a_(i+1) ∂/∂a_i (가중치 1 증가)

    Raises:
        ValueError: a0...ad 이외의 변수 포함
    """
    rules = [(i, i + 1, d - i) for i in range(d)]
    return linear_derivation(poly, binary_coefficient_names(d), rules)


def _operator_matrix(
    columns: Sequence[Exponent],
    variables: Tuple[str, ...],
    operator
) -> ExactMatrix:
    """단항식 열에 대한 연산자의 행렬 (행 = 상 공간의 단항식, 내림차순)"""
    images = [operator(SparsePolynomial._raw(variables, {e: Fraction(1)})) for e in columns]
    row_keys = sorted({e for img in images for e in img.terms}, reverse=True)
    index = {e: r for r, e in enumerate(row_keys)}
    rows = [[Fraction(0)] * len(columns) for _ in row_keys]
    for c, img in enumerate(images):
        for e, coeff in img.with_variables(variables).terms.items():
            rows[index[e]][c] = coeff
    return ExactMatrix(rows, n_cols=len(columns))


def _combine(vector: Sequence[Fraction], columns: Sequence[Exponent], variables: Tuple[str, ...]) -> SparsePolynomial:
    return SparsePolynomial._raw(variables, {e: c for e, c in zip(columns, vector) if c})


def invariant_basis(d: int, g: int) -> List[SparsePolynomial]:
    """등가중 g차 단항식 위에서 ker(D) 의 기저 (선두 계수 1)"""
    space = isobaric_monomials(d, g)
    if not space.basis:
        return []
    variables = space.variables
    matrix = _operator_matrix(space.basis, variables, lambda m: apply_D(m, d))
    kernel = kernel_basis(matrix)
    basis = [_combine(v, space.basis, variables) for v in kernel]
    logger.info(f"이진 불변식 계산 완료: d={d}, g={g}, 등가중 단항식 {len(space)}개, 불변식 {len(basis)}개")
    return basis


def reynolds(poly: SparsePolynomial, d: int, g: int) -> SparsePolynomial:
    """레이놀즈 사영 (sl(2) 가중치 사다리 분해로 자명 성분 추출)

    가중치 dg/2 가 아닌 성분은 0으로 보냅니다. 가중치 dg/2 공간은
    불변식 공간과, 높은 가중치 q 의 최고 가중 벡터(ker Δ)에 D^(q-dg/2)를
    적용한 벡터들의 생성 공간으로 직합 분해됩니다.

    Raises:
        ValueError: g차 동차식이 아니거나 a0...ad 이외의 변수 포함
    """
    variables = binary_coefficient_names(d)
    foreign = [v for v in poly.used_variables() if v not in variables]
    if foreign:
        raise ValueError(f"허용되지 않은 변수 {foreign}가 포함되어 있습니다.")
    if poly.is_zero():
        return SparsePolynomial.zero(variables)
    aligned = poly.with_variables(variables)
    degrees = {sum(e) for e in aligned.terms}
    if degrees != {g}:
        raise ValueError(f"레이놀즈 사영의 입력은 {g}차 동차식이어야 합니다. (차수: {sorted(degrees)})")
    if (d * g) % 2:
        return SparsePolynomial.zero(variables)

    p0 = d * g // 2
    component = {e: c for e, c in aligned.terms.items() if sum(i * n for i, n in enumerate(e)) == p0}
    if not component:
        return SparsePolynomial.zero(variables)

    center = weighted_exponents(d, g, p0)
    invariants = invariant_basis(d, g)
    spanning: List[SparsePolynomial] = list(invariants)
    for q in range(p0 + 1, d * g + 1):
        level = weighted_exponents(d, g, q)
        if not level:
            continue
        raise_matrix = _operator_matrix(level, variables, lambda m: apply_Delta(m, d))
        for vec in kernel_basis(raise_matrix):
            vector = _combine(vec, level, variables)
            for _ in range(q - p0):
                vector = apply_D(vector, d)
            spanning.append(vector)
    if len(spanning) != len(center):
        raise RuntimeError(f"가중치 공간 분해 실패: 생성 벡터 {len(spanning)}개, 차원 {len(center)}")

    index = {e: r for r, e in enumerate(center)}
    rows = [[Fraction(0)] * len(spanning) for _ in center]
    for c, vec in enumerate(spanning):
        for e, coeff in vec.with_variables(variables).terms.items():
            rows[index[e]][c] = coeff
    rhs = [component.get(e, Fraction(0)) for e in center]
    solution = solve(ExactMatrix(rows, n_cols=len(spanning)), rhs)

    result = SparsePolynomial.zero(variables)
    for c, inv in zip(solution[:len(invariants)], invariants):
        if c:
            result = result + inv.scale(c)
    return result
