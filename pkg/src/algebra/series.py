"""
절단 멱급수 모듈

총차수 N 이하의 항만 유지하는 1~3변수 멱급수입니다.
힐베르트 급수, 몰리엔 급수, Φ_j 연산의 공통 표현입니다.
"""
from fractions import Fraction
from operator import add
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union
import logging

from src.algebra.polynomial import Exponent, Scalar, SparsePolynomial, to_fraction

logger = logging.getLogger(__name__)


class TruncatedSeries:
    """총차수 기준으로 절단된 멱급수

    Attributes:
        polynomial: 차수 N 이하 항만 가진 다항식
        truncation: 총차수 상한 N
    """

    __slots__ = ("polynomial", "truncation")

    def __init__(self, polynomial: SparsePolynomial, truncation: int):
        if truncation < 0:
            raise ValueError(f"절단 차수는 0 이상이어야 합니다. (입력: {truncation})")
        self.truncation = int(truncation)
        terms = {e: c for e, c in polynomial.terms.items() if sum(e) <= truncation}
        self.polynomial = SparsePolynomial._raw(polynomial.variables, terms)

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.polynomial.variables

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return self.polynomial.terms

    @classmethod
    def one(cls, variables: Sequence[str], truncation: int) -> "TruncatedSeries":
        return cls(SparsePolynomial.constant(1, variables), truncation)

    # --- 산술 ---

    def _align(self, other: "TruncatedSeries") -> Tuple[Tuple[str, ...], int, Dict, Dict]:
        variables = self.polynomial._merged_variables(other.polynomial)
        truncation = min(self.truncation, other.truncation)
        return (
            variables,
            truncation,
            self.polynomial.with_variables(variables).terms,
            other.polynomial.with_variables(variables).terms,
        )

    def _coerce(self, other) -> Optional["TruncatedSeries"]:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, SparsePolynomial):
            return TruncatedSeries(other, self.truncation)
        try:
            return TruncatedSeries(SparsePolynomial.constant(to_fraction(other), self.variables), self.truncation)
        except ValueError:
            return None

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TruncatedSeries(self.polynomial + other.polynomial, min(self.truncation, other.truncation))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self.polynomial, self.truncation)

    def __sub__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, (TruncatedSeries, SparsePolynomial)):
            try:
                scalar = to_fraction(other)
            except ValueError:
                return NotImplemented
            return TruncatedSeries(self.polynomial.scale(scalar), self.truncation)
        other = self._coerce(other)
        variables, truncation, a, b = self._align(other)
        b_sorted = sorted(((sum(e), e, c) for e, c in b.items()), key=lambda item: item[0])
        terms: Dict[Exponent, Fraction] = {}
        for ea, ca in a.items():
            da = sum(ea)
            if da > truncation:
                continue
            for db, eb, cb in b_sorted:
                if da + db > truncation:
                    break
                exps = tuple(map(add, ea, eb))
                total = terms.get(exps, 0) + ca * cb
                if total:
                    terms[exps] = total
                else:
                    terms.pop(exps, None)
        return TruncatedSeries(SparsePolynomial._raw(variables, terms), truncation)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """역급수

        Raises:
            ValueError: 상수항이 0인 경우
        """
        c0 = self.polynomial.constant_term()
        if not c0:
            raise ValueError("상수항이 0인 급수는 역원을 갖지 않습니다.")
        u = (self.polynomial.scale(1 / c0) - 1)
        u_series = TruncatedSeries(u, self.truncation)
        result = TruncatedSeries.one(self.variables, self.truncation)
        # 1/(1+u) = 1 - u(1 - u(1 - ...)) : 한 번 반복할 때마다 한 차수씩 정확해짐
        for _ in range(self.truncation):
            result = 1 - u_series * result
        return result * (1 / c0)

    def truncate(self, truncation: int) -> "TruncatedSeries":
        if truncation > self.truncation:
            raise ValueError(
                f"현재 절단 차수({self.truncation})보다 높은 차수({truncation})로 늘릴 수 없습니다."
            )
        return TruncatedSeries(self.polynomial, truncation)

    # --- Φ_j ---

    def phi(self, j: int, variable: Optional[str] = None, truncation: Optional[int] = None) -> "TruncatedSeries":
        """Φ_j: variable^n → variable^(n/j) (j | n), 그 외 0

        다른 변수의 지수는 그대로 둡니다. 결과 절단 차수 기본값은 N // j 입니다.

        Raises:
            ValueError: j <= 0 또는 다변수 급수에서 variable 미지정
        """
        if j <= 0:
            raise ValueError(f"Φ_j의 j는 양의 정수여야 합니다. (입력: {j})")
        if variable is None:
            used = self.polynomial.used_variables()
            if len(self.variables) == 1:
                variable = self.variables[0]
            elif len(used) <= 1:
                variable = used[0] if used else (self.variables[0] if self.variables else "z")
            else:
                raise ValueError(f"다변수 급수에서는 Φ_j를 적용할 변수를 지정해야 합니다: {self.variables}")
        if truncation is None:
            truncation = self.truncation // j
        if variable not in self.variables:
            return TruncatedSeries(self.polynomial, min(truncation, self.truncation))
        idx = self.variables.index(variable)
        terms: Dict[Exponent, Fraction] = {}
        for exps, coeff in self.terms.items():
            if exps[idx] % j == 0:
                new = list(exps)
                new[idx] = exps[idx] // j
                terms[tuple(new)] = coeff
        return TruncatedSeries(SparsePolynomial._raw(self.variables, terms), truncation)

    # --- 계수 ---

    def coefficient(self, exponents: Union[Mapping[str, int], int]) -> Fraction:
        """단항식 계수 (일변수 급수는 정수 차수로 조회 가능)

        Raises:
            ValueError: 절단 차수를 넘는 단항식
        """
        if isinstance(exponents, int):
            if len(self.variables) != 1:
                raise ValueError("정수 차수 조회는 일변수 급수에서만 가능합니다.")
            exponents = {self.variables[0]: exponents}
        if sum(exponents.values()) > self.truncation:
            raise ValueError(
                f"차수 {sum(exponents.values())}는 절단 차수 {self.truncation}를 넘습니다."
            )
        return self.polynomial.coefficient(exponents)

    def coefficients(self) -> List[Fraction]:
        """일변수 급수의 계수 목록 [c_0, ..., c_N]"""
        if len(self.variables) > 1:
            raise ValueError(f"일변수 급수가 아닙니다: {self.variables}")
        if not self.variables:
            return [self.polynomial.constant_term()] + [Fraction(0)] * self.truncation
        return [self.terms.get((k,), Fraction(0)) for k in range(self.truncation + 1)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.truncation, other.truncation)
        return self.truncate(n).polynomial == other.truncate(n).polynomial

    __hash__ = None

    def __str__(self) -> str:
        return f"{self.polynomial} + O(deg {self.truncation + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self})"


def one_minus(exponents: Mapping[str, int]) -> SparsePolynomial:
    """1 - 단항식 (예: one_minus({'t': 4}) = 1 - t^4)"""
    variables = tuple(exponents)
    return SparsePolynomial(
        variables,
        {(0,) * len(variables): 1, tuple(exponents[v] for v in variables): -1},
    )


def series_inverse_factor(exponents: Mapping[str, int], truncation: int) -> TruncatedSeries:
    """1/(1 - m) = Σ m^k 의 절단 전개

    Raises:
        ValueError: 지수 벡터가 0인 경우
    """
    exponents = {v: int(e) for v, e in exponents.items()}
    if any(e < 0 for e in exponents.values()):
        raise ValueError(f"음의 지수는 허용되지 않습니다: {exponents}")
    degree = sum(exponents.values())
    if degree == 0:
        raise ValueError("지수 벡터가 0인 단항식(상수 1)은 기하급수 전개를 갖지 않습니다.")
    variables = tuple(exponents)
    base = tuple(exponents[v] for v in variables)
    terms = {tuple(k * e for e in base): Fraction(1) for k in range(truncation // degree + 1)}
    return TruncatedSeries(SparsePolynomial._raw(variables, terms), truncation)


def factor_exponents(factor: SparsePolynomial) -> Dict[str, int]:
    """'1 - 단항식' 꼴 인수의 단항식 지수

    Raises:
        ValueError: 형식이 맞지 않는 인수
    """
    if len(factor.terms) != 2 or factor.constant_term() != 1:
        raise ValueError(f"분모 인수는 1 - (단항식) 꼴이어야 합니다: {factor}")
    zero = (0,) * len(factor.variables)
    exps, coeff = next((e, c) for e, c in factor.terms.items() if e != zero)
    if coeff != -1:
        raise ValueError(f"분모 인수는 1 - (단항식) 꼴이어야 합니다: {factor}")
    return {v: e for v, e in zip(factor.variables, exps) if e}


def rational_series(
    numerator: Union[SparsePolynomial, Scalar],
    factors: Sequence[SparsePolynomial],
    truncation: int
) -> TruncatedSeries:
    """분자 · Π (1 - m_i)^{-1} 의 절단 전개

    Raises:
        ValueError: 1 - 단항식 꼴이 아닌 분모 인수
    """
    if not isinstance(numerator, SparsePolynomial):
        numerator = SparsePolynomial.constant(numerator)
    result = TruncatedSeries(numerator, truncation)
    for factor in factors:
        result = result * series_inverse_factor(factor_exponents(factor), truncation)
    logger.debug(f"유리 급수 전개 완료: 인수 {len(factors)}개, 항 {len(result.terms)}개, N={truncation}")
    return result


def series_matches_rational(
    series: TruncatedSeries,
    numerator: Union[SparsePolynomial, Scalar],
    factors: Sequence[SparsePolynomial]
) -> bool:
    """급수 · Π(분모 인수) == 분자 (절단 차수까지) 여부로 닫힌 형태를 판정"""
    if not isinstance(numerator, SparsePolynomial):
        numerator = SparsePolynomial.constant(numerator)
    for factor in factors:
        factor_exponents(factor)
    product = series
    for factor in factors:
        product = product * TruncatedSeries(factor, series.truncation)
    return product == TruncatedSeries(numerator, series.truncation)
