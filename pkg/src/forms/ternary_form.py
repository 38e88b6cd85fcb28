"""
삼진 형식 모듈

f = Σ (d!/α!) f_α x^α 규약의 삼진 형식과
연산자 D₁/D₂, 커널 방법 불변식, 평면 사차곡선의 삼차 불변식 A,
클렙시 카탈렉티컨트, 다중선형화(polarization)를 제공합니다.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union
import logging

from config.settings import SYMBOL_NAMES
from src.algebra.algebra_utils import binomial, compositions, multinomial
from src.algebra.linalg import ExactMatrix, determinant, kernel_basis
from src.algebra.polynomial import (
    Exponent,
    Scalar,
    SparsePolynomial,
    collapse,
    linear_derivation,
)
from src.forms.binary_form import BinaryForm

logger = logging.getLogger(__name__)

Index3 = Tuple[int, int, int]
Coefficient = Union[SparsePolynomial, Scalar]


def ternary_indices(d: int) -> List[Index3]:
    """α = (i0, i1, i2), |α| = d (사전식 내림차순)"""
    return compositions(d, 3)


def ternary_coefficient_name(alpha: Sequence[int]) -> str:
    prefix = SYMBOL_NAMES["ternary_coefficient"]
    return prefix + "".join(str(i) for i in alpha)


def ternary_coefficient_names(d: int) -> Tuple[str, ...]:
    return tuple(ternary_coefficient_name(a) for a in ternary_indices(d))


def _as_polynomial(value: Coefficient) -> SparsePolynomial:
    if isinstance(value, SparsePolynomial):
        return value
    return SparsePolynomial.constant(value)


@dataclass(frozen=True)
class TernaryForm:
    """다항계수 규약의 삼진 형식"""
    degree: int  # 차수 d
    coefficients: Tuple[SparsePolynomial, ...]  # ternary_indices(d) 순서의 f_α

    def __post_init__(self):
        expected = binomial(self.degree + 2, 2)
        if len(self.coefficients) != expected:
            raise ValueError(
                f"차수 {self.degree} 삼진 형식은 계수 {expected}개가 필요합니다. (입력: {len(self.coefficients)}개)"
            )
        object.__setattr__(self, "coefficients", tuple(_as_polynomial(c) for c in self.coefficients))

    @classmethod
    def symbolic(cls, d: int) -> "TernaryForm":
        return cls(d, tuple(SparsePolynomial.variable(n) for n in ternary_coefficient_names(d)))

    @classmethod
    def from_coefficients(cls, d: int, coefficients: Mapping[Index3, Coefficient]) -> "TernaryForm":
        """지정하지 않은 계수는 0"""
        for alpha in coefficients:
            if len(alpha) != 3 or sum(alpha) != d or min(alpha) < 0:
                raise ValueError(f"차수 {d} 삼진 형식의 지수가 아닙니다: {alpha}")
        return cls(d, tuple(coefficients.get(a, 0) for a in ternary_indices(d)))

    @classmethod
    def from_polynomial(cls, poly: SparsePolynomial, degree: int) -> "TernaryForm":
        """x0, x1, x2 에 대한 동차 다항식에서 f_α = (x^α 계수) · α!/d! 추출

        Raises:
            ValueError: 동차 다항식이 아닌 경우
        """
        xs = SYMBOL_NAMES["ternary_variables"]
        if not poly.is_homogeneous(xs):
            raise ValueError(f"x0, x1, x2 에 대한 동차 다항식이 아닙니다: {poly}")
        coefficients = tuple(
            poly.coefficient_of(xs, alpha) / multinomial(alpha) for alpha in ternary_indices(degree)
        )
        form = cls(degree, coefficients)
        if form.to_polynomial() != poly:
            raise ValueError(f"{degree}차 동차 다항식이 아닙니다: {poly}")
        return form

    def coefficient(self, alpha: Sequence[int]) -> SparsePolynomial:
        return self.coefficients[ternary_indices(self.degree).index(tuple(alpha))]

    def coefficient_map(self) -> Dict[str, SparsePolynomial]:
        """계수 미지수 이름 → 계수"""
        return dict(zip(ternary_coefficient_names(self.degree), self.coefficients))

    def to_polynomial(self) -> SparsePolynomial:
        xs = SYMBOL_NAMES["ternary_variables"]
        result = SparsePolynomial.zero(xs)
        for alpha, c in zip(ternary_indices(self.degree), self.coefficients):
            if c:
                result = result + c * SparsePolynomial.monomial(xs, alpha, multinomial(alpha))
        return result

    def evaluate(self, point: Sequence[Coefficient]) -> Union[Fraction, SparsePolynomial]:
        xs = SYMBOL_NAMES["ternary_variables"]
        return collapse(self.to_polynomial().substitute(dict(zip(xs, point))))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients)

    def scale(self, scalar: Scalar) -> "TernaryForm":
        return TernaryForm(self.degree, tuple(c.scale(scalar) for c in self.coefficients))

    def __add__(self, other: "TernaryForm") -> "TernaryForm":
        if self.degree != other.degree:
            raise ValueError(f"차수가 다른 형식은 더할 수 없습니다: {self.degree} vs {other.degree}")
        return TernaryForm(self.degree, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return self.degree == other.degree and all(
            a == b for a, b in zip(self.coefficients, other.coefficients)
        )

    __hash__ = None

    def __str__(self) -> str:
        return str(self.to_polynomial())


def power_form_ternary(l: Sequence[Coefficient], d: int) -> TernaryForm:
    """l^d 의 계수 (f_α = l^α)"""
    if len(l) != 3:
        raise ValueError(f"삼진 일차형식은 계수 3개가 필요합니다. (입력: {len(l)}개)")
    l = [_as_polynomial(c) for c in l]
    return TernaryForm(d, tuple((l[0] ** a[0]) * (l[1] ** a[1]) * (l[2] ** a[2]) for a in ternary_indices(d)))


def restrict_to_line(f: TernaryForm, p: Sequence[Coefficient], q: Sequence[Coefficient]) -> BinaryForm:
    """(x, y) ↦ f(x·p + y·q) 인 이진 형식"""
    x, y = (SparsePolynomial.variable(v) for v in SYMBOL_NAMES["binary_variables"])
    xs = SYMBOL_NAMES["ternary_variables"]
    mapping = {xs[i]: x * _as_polynomial(p[i]) + y * _as_polynomial(q[i]) for i in range(3)}
    return BinaryForm.from_polynomial(f.to_polynomial().substitute(mapping), f.degree)


# --- 연산자 D₁, D₂ ---

def _shift_rules(d: int, source_axis: int, target_axis: int) -> List[Tuple[int, int, int]]:
    indices = ternary_indices(d)
    position = {a: k for k, a in enumerate(indices)}
    rules = []
    for k, alpha in enumerate(indices):
        if alpha[source_axis]:
            target = list(alpha)
            target[source_axis] -= 1
            target[target_axis] += 1
            rules.append((k, position[tuple(target)], alpha[source_axis]))
    return rules


def apply_D1(poly: SparsePolynomial, d: int) -> SparsePolynomial:
    """D₁ = Σ i1 f_(i0+1, i1-1, i2) ∂/∂f_(i0 i1 i2) (가중치 (1,-1,0) 이동)

    Raises:
        ValueError: 계수 미지수 이외의 변수 포함
    """
    return linear_derivation(poly, ternary_coefficient_names(d), _shift_rules(d, 1, 0))


def apply_D2(poly: SparsePolynomial, d: int) -> SparsePolynomial:
    """D₂ = Σ i2 f_(i0, i1+1, i2-1) ∂/∂f_(i0 i1 i2) (가중치 (0,1,-1) 이동)

    Raises:
        ValueError: 계수 미지수 이외의 변수 포함
    """
    return linear_derivation(poly, ternary_coefficient_names(d), _shift_rules(d, 2, 1))


# --- 등가중 단항식과 불변식 ---

@dataclass(frozen=True)
class TernaryIsobaricSpace:
    """가중치 (p,p,p) 인 g차 단항식 공간"""
    d: int  # 형식 차수
    g: int  # 단항식 차수
    weight: Optional[int]  # p = dg/3 (3 ∤ dg 이면 None)
    basis: Tuple[Exponent, ...] = field(default_factory=tuple)  # 지수 벡터 (사전식 내림차순)

    @property
    def variables(self) -> Tuple[str, ...]:
        return ternary_coefficient_names(self.d)

    @property
    def total_monomials(self) -> int:
        """가중치 조건 없는 g차 단항식 전체 개수"""
        return binomial(len(self.variables) + self.g - 1, self.g)

    def __len__(self) -> int:
        return len(self.basis)

    def monomials(self) -> List[SparsePolynomial]:
        return [SparsePolynomial._raw(self.variables, {e: Fraction(1)}) for e in self.basis]


def ternary_weighted_exponents(d: int, g: int, weight: Sequence[int]) -> List[Exponent]:
    """g차이면서 가중치가 weight 인 지수 벡터 (사전식 내림차순)"""
    indices = ternary_indices(d)
    n = len(indices)
    if sum(weight) != d * g or min(weight) < 0:
        return []
    # 접미 구간의 좌표별 최소/최대
    suffix_min = [[0] * 3 for _ in range(n + 1)]
    suffix_max = [[0] * 3 for _ in range(n + 1)]
    for c in range(3):
        suffix_min[n][c] = d + 1
        suffix_max[n][c] = -1
        for k in range(n - 1, -1, -1):
            suffix_min[k][c] = min(suffix_min[k + 1][c], indices[k][c])
            suffix_max[k][c] = max(suffix_max[k + 1][c], indices[k][c])
    result: List[Exponent] = []

    def rec(k: int, remaining: int, w: Tuple[int, int, int], prefix: Tuple[int, ...]):
        if remaining == 0:
            if w == (0, 0, 0):
                result.append(prefix + (0,) * (n - k))
            return
        if k == n:
            return
        for c in range(3):
            if w[c] < remaining * suffix_min[k][c] or w[c] > remaining * suffix_max[k][c]:
                return
        alpha = indices[k]
        for count in range(remaining, -1, -1):
            nw = (w[0] - count * alpha[0], w[1] - count * alpha[1], w[2] - count * alpha[2])
            if min(nw) < 0:
                continue
            rec(k + 1, remaining - count, nw, prefix + (count,))

    rec(0, g, tuple(weight), ())
    return result


def ternary_isobaric_monomials(d: int, g: int) -> TernaryIsobaricSpace:
    """가중치 (dg/3, dg/3, dg/3) 의 등가중 단항식 (3 ∤ dg 이면 빈 공간)"""
    if (d * g) % 3:
        return TernaryIsobaricSpace(d, g, None, ())
    p = d * g // 3
    return TernaryIsobaricSpace(d, g, p, tuple(ternary_weighted_exponents(d, g, (p, p, p))))


def ternary_invariant_basis(d: int, g: int) -> List[SparsePolynomial]:
    """등가중 공간 위에서 ker D₁ ∩ ker D₂ 의 기저 (선두 계수 1)"""
    space = ternary_isobaric_monomials(d, g)
    if not space.basis:
        return []
    variables = space.variables
    images = []
    for exps in space.basis:
        mono = SparsePolynomial._raw(variables, {exps: Fraction(1)})
        images.append((apply_D1(mono, d), apply_D2(mono, d)))
    row_keys = sorted({(k, e) for pair in images for k, img in enumerate(pair) for e in img.terms}, reverse=True)
    index = {key: r for r, key in enumerate(row_keys)}
    rows = [[Fraction(0)] * len(space.basis) for _ in row_keys]
    for c, pair in enumerate(images):
        for k, img in enumerate(pair):
            for e, coeff in img.terms.items():
                rows[index[(k, e)]][c] = coeff
    kernel = kernel_basis(ExactMatrix(rows, n_cols=len(space.basis)))
    basis = [
        SparsePolynomial._raw(variables, {e: x for e, x in zip(space.basis, vec) if x})
        for vec in kernel
    ]
    logger.info(f"삼진 불변식 계산 완료: d={d}, g={g}, 등가중 단항식 {len(space)}개, 불변식 {len(basis)}개")
    return basis


# --- 평면 사차곡선의 삼차 불변식 A ---

_CUBIC_INVARIANT_TERMS: List[Tuple[int, Tuple[str, ...]]] = [
    (1, ("400", "040", "004")),
    (3, ("220", "220", "004")), (3, ("202", "202", "040")), (3, ("400", "022", "022")),
    (12, ("202", "121", "121")), (12, ("220", "112", "112")), (12, ("022", "211", "211")),
    (6, ("220", "202", "022")),
    (-4, ("301", "103", "040")), (-4, ("400", "031", "013")), (-4, ("310", "130", "004")),
    (4, ("310", "103", "031")), (4, ("301", "130", "013")),
    (-12, ("202", "130", "112")), (-12, ("220", "121", "103")), (-12, ("211", "202", "031")),
    (-12, ("301", "121", "022")), (-12, ("310", "112", "022")), (-12, ("220", "211", "013")),
    (-12, ("211", "121", "112")),
    (12, ("310", "121", "013")), (12, ("211", "130", "103")), (12, ("301", "112", "031")),
]


def cubic_invariant_A(f: Optional[TernaryForm] = None) -> Union[SparsePolynomial, Fraction]:
    """평면 사차곡선의 23항 삼차 불변식 A(f)

    f 를 생략하면 계수 미지수 f400 ... f004 의 다항식을 반환합니다.
    """
    variables = ternary_coefficient_names(4)
    position = {name: k for k, name in enumerate(variables)}
    prefix = SYMBOL_NAMES["ternary_coefficient"]
    terms: Dict[Exponent, Fraction] = {}
    for coeff, factors in _CUBIC_INVARIANT_TERMS:
        exps = [0] * len(variables)
        for label in factors:
            exps[position[prefix + label]] += 1
        terms[tuple(exps)] = Fraction(coeff)
    poly = SparsePolynomial(variables, terms)
    if f is None:
        return poly
    if f.degree != 4:
        raise ValueError(f"사차 형식이 아닙니다. (차수: {f.degree})")
    return collapse(poly.substitute(f.coefficient_map()))


def polarize(poly: SparsePolynomial, forms: Sequence[Union[TernaryForm, BinaryForm]]) -> Union[SparsePolynomial, Fraction]:
    """다중선형화: P(s1 f1 + ... + sm fm) 에서 s1...sm 의 계수

    P 는 형식 계수 미지수에 대한 m차 동차식이어야 합니다.

    Raises:
        ValueError: 형식 개수와 P 의 차수가 다르거나 형식 차수가 다른 경우
    """
    m = len(forms)
    if not forms:
        raise ValueError("다중선형화에는 형식이 하나 이상 필요합니다.")
    if len({form.degree for form in forms}) != 1:
        raise ValueError(f"같은 차수의 형식만 다중선형화할 수 있습니다: {[f.degree for f in forms]}")
    if not poly.is_zero() and (not poly.is_homogeneous() or poly.total_degree != m):
        raise ValueError(f"다항식의 차수({poly.total_degree})가 형식 개수({m})와 다릅니다.")
    scalars = tuple(f"_s{k}" for k in range(m))
    maps = [form.coefficient_map() for form in forms]
    mapping = {}
    for name in poly.used_variables():
        combo = SparsePolynomial.zero(scalars)
        for k, coefficient_map in enumerate(maps):
            if name not in coefficient_map:
                raise ValueError(f"형식에 없는 계수 미지수입니다: {name}")
            combo = combo + coefficient_map[name] * SparsePolynomial.variable(scalars[k])
        mapping[name] = combo
    expanded = poly.substitute(mapping)
    return collapse(expanded.coefficient_of(scalars, (1,) * m))


def trilinear_A(f: TernaryForm, g: TernaryForm, h: TernaryForm, method: str = "polarize") -> Union[SparsePolynomial, Fraction]:
    """삼차 불변식의 완전 다중선형화 A(f, g, h)

    A(f, f, f) = 6·A(f), 사승 형식에서는 A(a⁴, b⁴, c⁴) = det(a, b, c)⁴.

    Args:
        method: "polarize" (닫힌 식의 다중선형화) 또는 "tableau" (기호 타블로 전개)

    Raises:
        ValueError: 사차 형식이 아니거나 알 수 없는 method
    """
    for form in (f, g, h):
        if form.degree != 4:
            raise ValueError(f"사차 형식이 아닙니다. (차수: {form.degree})")
    if method == "polarize":
        return polarize(cubic_invariant_A(), [f, g, h])
    if method == "tableau":
        from src.tableaux.brackets import tableau_multilinear
        from src.tableaux.young import Tableau
        tableau = Tableau.from_rows([[1, 1, 1, 1], [2, 2, 2, 2], [3, 3, 3, 3]])
        return tableau_multilinear(tableau, [f, g, h])
    raise ValueError(f"알 수 없는 계산 방법입니다: {method} (polarize | tableau)")


# --- 클렙시 카탈렉티컨트 ---

@dataclass
class CatalecticantResult:
    """클렙시 카탈렉티컨트 행렬과 행렬식"""
    matrix: Union[ExactMatrix, List[List[SparsePolynomial]]]  # 6×6 대칭 행렬
    determinant: Union[Fraction, SparsePolynomial]  # det C_f

    @property
    def is_clebsch(self) -> bool:
        return self.determinant == 0


def clebsch_catalecticant(f: TernaryForm) -> CatalecticantResult:
    """S²V^∨ → S²V 축약 행렬 M[β][γ] = f_(β+γ) 과 그 행렬식

    Raises:
        ValueError: 사차 형식이 아닌 경우
    """
    if f.degree != 4:
        raise ValueError(f"사차 형식이 아닙니다. (차수: {f.degree})")
    quadratic = ternary_indices(2)
    entries = [
        [f.coefficient(tuple(b + c for b, c in zip(beta, gamma))) for gamma in quadratic]
        for beta in quadratic
    ]
    if all(e.is_constant() for row in entries for e in row):
        matrix = ExactMatrix([[e.constant_value() for e in row] for row in entries])
        det = determinant(matrix)
        logger.info(f"클렙시 카탈렉티컨트 계산 완료: 계수 {matrix.rank()}, 행렬식 {det}")
        return CatalecticantResult(matrix, det)
    return CatalecticantResult(entries, determinant(entries))
