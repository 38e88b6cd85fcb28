"""
희소 다변수 다항식 모듈

유리수 계수를 지수 벡터에 대응시키는 희소 표현입니다.
모든 계산 모듈(형식, 타블로, 급수, 점 배치)의 공통 기반입니다.
"""
from fractions import Fraction
from operator import add
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union
import logging

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    """정수/분수/"p/q" 문자열을 Fraction으로 변환

    Raises:
        ValueError: 부동소수점 등 정확하지 않은 값
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"유리수로 해석할 수 없는 문자열입니다: {value!r}")
    # numpy 정수 등 정수형 스칼라
    if hasattr(value, "__index__"):
        return Fraction(int(value))
    raise ValueError(f"정확한 유리수가 아닌 값은 사용할 수 없습니다: {value!r} ({type(value).__name__})")


def graded_lex_key(exponents: Exponent) -> Tuple[int, Exponent]:
    """차수 우선 사전식 정렬 키 (내림차순 정렬 시 선두항이 먼저)"""
    return (sum(exponents), exponents)


class SparsePolynomial:
    """희소 다변수 다항식

    Attributes:
        variables: 미지수 이름의 순서 있는 튜플 (변수 순서가 단항식 순서를 결정)
        terms: {지수 벡터: 0이 아닌 Fraction 계수}
    """

    __slots__ = ("variables", "terms")

    def __init__(
        self,
        variables: Sequence[str] = (),
        terms: Optional[Mapping[Exponent, Scalar]] = None
    ):
        self.variables: Tuple[str, ...] = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"변수 이름이 중복되었습니다: {self.variables}")
        self.terms: Dict[Exponent, Fraction] = {}
        if terms:
            n = len(self.variables)
            for exps, coeff in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != n:
                    raise ValueError(f"지수 벡터 길이({len(exps)})가 변수 개수({n})와 다릅니다.")
                if any(e < 0 for e in exps):
                    raise ValueError(f"음의 지수는 허용되지 않습니다: {exps}")
                value = to_fraction(coeff)
                if value:
                    total = self.terms.get(exps, 0) + value
                    if total:
                        self.terms[exps] = total
                    else:
                        self.terms.pop(exps, None)

    @classmethod
    def _raw(cls, variables: Tuple[str, ...], terms: Dict[Exponent, Fraction]) -> "SparsePolynomial":
        """검증 없이 생성 (내부용, 0 계수가 없다고 가정)"""
        poly = cls.__new__(cls)
        poly.variables = variables
        poly.terms = terms
        return poly

    # --- 생성자 ---

    @classmethod
    def constant(cls, value: Scalar, variables: Sequence[str] = ()) -> "SparsePolynomial":
        value = to_fraction(value)
        variables = tuple(variables)
        if not value:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, name: str) -> "SparsePolynomial":
        return cls._raw((name,), {(1,): Fraction(1)})

    @classmethod
    def monomial(
        cls,
        variables: Sequence[str],
        exponents: Sequence[int],
        coefficient: Scalar = 1
    ) -> "SparsePolynomial":
        return cls(variables, {tuple(exponents): coefficient})

    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> "SparsePolynomial":
        return cls._raw(tuple(variables), {})

    # --- 기본 성질 ---

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def total_degree(self) -> int:
        """총차수 (영다항식은 -1)"""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if name not in self.variables or not self.terms:
            return 0
        idx = self.variables.index(name)
        return max(e[idx] for e in self.terms)

    def used_variables(self) -> Tuple[str, ...]:
        """실제로 나타나는 변수들 (원래 순서 유지)"""
        used = [False] * len(self.variables)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.variables, used) if u)

    def is_constant(self) -> bool:
        return not self.used_variables()

    def constant_value(self) -> Fraction:
        """상수 다항식의 값

        Raises:
            ValueError: 상수가 아닌 경우
        """
        if not self.is_constant():
            raise ValueError(f"상수가 아닌 다항식입니다: {self}")
        if not self.terms:
            return Fraction(0)
        return next(iter(self.terms.values()))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    # --- 변수 정렬 ---

    def with_variables(self, variables: Sequence[str]) -> "SparsePolynomial":
        """주어진 변수 순서로 재색인

        Raises:
            ValueError: 사용 중인 변수가 새 순서에 없는 경우
        """
        variables = tuple(variables)
        if variables == self.variables:
            return self
        index = {v: i for i, v in enumerate(variables)}
        moves = []
        for i, v in enumerate(self.variables):
            if v in index:
                moves.append((i, index[v]))
        kept = {i for i, _ in moves}
        terms: Dict[Exponent, Fraction] = {}
        n = len(variables)
        for exps, coeff in self.terms.items():
            for i, e in enumerate(exps):
                if e and i not in kept:
                    raise ValueError(f"변수 '{self.variables[i]}'가 새 변수 목록에 없습니다.")
            new = [0] * n
            for i, j in moves:
                new[j] = exps[i]
            terms[tuple(new)] = coeff
        return SparsePolynomial._raw(variables, terms)

    def _merged_variables(self, other: "SparsePolynomial") -> Tuple[str, ...]:
        if other.variables == self.variables:
            return self.variables
        extra = tuple(v for v in other.variables if v not in self.variables)
        return self.variables + extra

    def _coerce(self, other) -> Optional["SparsePolynomial"]:
        if isinstance(other, SparsePolynomial):
            return other
        try:
            return SparsePolynomial.constant(to_fraction(other), self.variables)
        except ValueError:
            return None

    # --- 산술 ---

    def __add__(self, other) -> "SparsePolynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        variables = self._merged_variables(other)
        a = self.with_variables(variables).terms
        b = other.with_variables(variables).terms
        terms = dict(a)
        for exps, coeff in b.items():
            total = terms.get(exps, 0) + coeff
            if total:
                terms[exps] = total
            else:
                terms.pop(exps, None)
        return SparsePolynomial._raw(variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "SparsePolynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "SparsePolynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            try:
                scalar = to_fraction(other)
            except ValueError:
                return NotImplemented
            return self.scale(scalar)
        variables = self._merged_variables(other)
        a = self.with_variables(variables).terms
        b = other.with_variables(variables).terms
        terms: Dict[Exponent, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exps = tuple(map(add, ea, eb))
                total = terms.get(exps, 0) + ca * cb
                if total:
                    terms[exps] = total
                else:
                    terms.pop(exps, None)
        return SparsePolynomial._raw(variables, terms)

    __rmul__ = __mul__

    def scale(self, scalar: Scalar) -> "SparsePolynomial":
        scalar = to_fraction(scalar)
        if not scalar:
            return SparsePolynomial.zero(self.variables)
        return SparsePolynomial._raw(self.variables, {e: c * scalar for e, c in self.terms.items()})

    def __truediv__(self, other) -> "SparsePolynomial":
        try:
            scalar = to_fraction(other)
        except ValueError:
            return NotImplemented
        if not scalar:
            raise ZeroDivisionError("다항식을 0으로 나눌 수 없습니다.")
        return self.scale(1 / scalar)

    def __pow__(self, exponent: int) -> "SparsePolynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"거듭제곱 지수는 0 이상의 정수여야 합니다: {exponent!r}")
        result = SparsePolynomial.constant(1, self.variables)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # --- 비교 ---

    def _canonical(self) -> Dict[Tuple[Tuple[str, int], ...], Fraction]:
        canon = {}
        for exps, coeff in self.terms.items():
            key = tuple((v, e) for v, e in zip(self.variables, exps) if e)
            canon[tuple(sorted(key))] = coeff
        return canon

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            try:
                other = SparsePolynomial.constant(to_fraction(other))
            except ValueError:
                return NotImplemented
        return self._canonical() == other._canonical()

    __hash__ = None

    # --- 미분/대입/평가 ---

    def diff(self, name: str) -> "SparsePolynomial":
        """편미분"""
        if name not in self.variables:
            return SparsePolynomial.zero(self.variables)
        idx = self.variables.index(name)
        terms: Dict[Exponent, Fraction] = {}
        for exps, coeff in self.terms.items():
            e = exps[idx]
            if e:
                new = list(exps)
                new[idx] = e - 1
                terms[tuple(new)] = coeff * e
        return SparsePolynomial._raw(self.variables, terms)

    def substitute(self, mapping: Mapping[str, Union["SparsePolynomial", Scalar]]) -> "SparsePolynomial":
        """변수에 다항식 또는 수를 대입"""
        targets = [(i, v) for i, v in enumerate(self.variables) if v in mapping]
        if not targets:
            return self
        rest = tuple(v for v in self.variables if v not in mapping)
        rest_idx = [i for i, v in enumerate(self.variables) if v not in mapping]
        values = {v: (mapping[v] if isinstance(mapping[v], SparsePolynomial)
                      else SparsePolynomial.constant(mapping[v])) for _, v in targets}
        power_cache: Dict[Tuple[str, int], SparsePolynomial] = {}

        def power(name: str, e: int) -> SparsePolynomial:
            key = (name, e)
            if key not in power_cache:
                power_cache[key] = values[name] ** e
            return power_cache[key]

        result = SparsePolynomial.zero(rest)
        for exps, coeff in self.terms.items():
            term = SparsePolynomial._raw(rest, {tuple(exps[i] for i in rest_idx): coeff})
            for i, v in targets:
                if exps[i]:
                    term = term * power(v, exps[i])
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """모든 사용 변수에 유리수를 대입하여 값을 계산

        Raises:
            ValueError: 값이 주어지지 않은 변수가 있는 경우
        """
        missing = [v for v in self.used_variables() if v not in values]
        if missing:
            raise ValueError(f"변수 {missing}의 값이 주어지지 않았습니다.")
        idx_values = [(i, to_fraction(values[v])) for i, v in enumerate(self.variables) if v in values]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for i, value in idx_values:
                if exps[i]:
                    term *= value ** exps[i]
            total += term
        return total

    # --- 계수 추출 ---

    def coefficient(self, exponents: Mapping[str, int]) -> Fraction:
        """정확한 단항식의 계수 (지정하지 않은 변수의 지수는 0)"""
        for name in exponents:
            if name not in self.variables and exponents[name]:
                return Fraction(0)
        exps = tuple(exponents.get(v, 0) for v in self.variables)
        return self.terms.get(exps, Fraction(0))

    def coefficient_of(self, names: Sequence[str], exponents: Sequence[int]) -> "SparsePolynomial":
        """일부 변수의 단항식 계수를 나머지 변수의 다항식으로 추출"""
        names = tuple(names)
        rest = tuple(v for v in self.variables if v not in names)
        rest_idx = [i for i, v in enumerate(self.variables) if v not in names]
        pick = [self.variables.index(v) if v in self.variables else None for v in names]
        terms: Dict[Exponent, Fraction] = {}
        for exps, coeff in self.terms.items():
            ok = True
            for p, e in zip(pick, exponents):
                if (exps[p] if p is not None else 0) != e:
                    ok = False
                    break
            if ok:
                terms[tuple(exps[i] for i in rest_idx)] = coeff
        return SparsePolynomial._raw(rest, terms)

    def sorted_terms(self) -> List[Tuple[Exponent, Fraction]]:
        """차수 우선 사전식 내림차순 항 목록"""
        return sorted(self.terms.items(), key=lambda item: graded_lex_key(item[0]), reverse=True)

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("영다항식에는 선두항이 없습니다.")
        return self.sorted_terms()[0]

    def monic(self) -> "SparsePolynomial":
        """선두 계수가 1이 되도록 정규화"""
        if not self.terms:
            return self
        return self.scale(1 / self.leading_term()[1])

    def is_homogeneous(self, names: Optional[Sequence[str]] = None) -> bool:
        if not self.terms:
            return True
        idx = range(len(self.variables)) if names is None else \
            [self.variables.index(v) for v in names if v in self.variables]
        degrees = {sum(exps[i] for i in idx) for exps in self.terms}
        return len(degrees) == 1

    def homogeneous_components(self) -> Dict[int, "SparsePolynomial"]:
        parts: Dict[int, Dict[Exponent, Fraction]] = {}
        for exps, coeff in self.terms.items():
            parts.setdefault(sum(exps), {})[exps] = coeff
        return {deg: SparsePolynomial._raw(self.variables, terms) for deg, terms in parts.items()}

    def is_proportional_to(self, other: "SparsePolynomial") -> bool:
        """영이 아닌 스칼라 배 관계 여부"""
        return self.ratio_to(other) is not None

    def ratio_to(self, other: "SparsePolynomial") -> Optional[Fraction]:
        """self = c·other 인 c (없으면 None)"""
        if self.is_zero() or other.is_zero():
            return None
        a = self._canonical()
        b = other._canonical()
        if a.keys() != b.keys():
            return None
        key = next(iter(a))
        c = a[key] / b[key]
        if all(a[k] == c * b[k] for k in a):
            return c
        return None

    # --- 출력 ---

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for v, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            magnitude = abs(coeff)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"SparsePolynomial({self})"


def symbols(names: Union[str, Iterable[str]]) -> List[SparsePolynomial]:
    """공백 구분 이름 목록으로 변수 다항식 생성"""
    if isinstance(names, str):
        names = names.split()
    return [SparsePolynomial.variable(n) for n in names]


def univariate_exact_divide(numerator: SparsePolynomial, denominator: SparsePolynomial) -> SparsePolynomial:
    """일변수 다항식의 정확한 나눗셈

    Raises:
        ValueError: 다변수이거나 나머지가 0이 아닌 경우
    """
    used = set(numerator.used_variables()) | set(denominator.used_variables())
    if len(used) > 1:
        raise ValueError(f"일변수 다항식만 나눌 수 있습니다: 변수 {sorted(used)}")
    if denominator.is_zero():
        raise ZeroDivisionError("0으로 나눌 수 없습니다.")
    name = next(iter(used)) if used else "t"
    num = numerator.with_variables((name,)) if numerator.variables != (name,) else numerator
    den = denominator.with_variables((name,)) if denominator.variables != (name,) else denominator
    n_deg = max((e[0] for e in num.terms), default=-1)
    d_deg = max(e[0] for e in den.terms)
    rem = [num.terms.get((k,), Fraction(0)) for k in range(n_deg + 1)]
    dvec = [den.terms.get((k,), Fraction(0)) for k in range(d_deg + 1)]
    lead = dvec[d_deg]
    quotient: Dict[Exponent, Fraction] = {}
    for k in range(n_deg - d_deg, -1, -1):
        c = rem[k + d_deg] / lead
        if c:
            quotient[(k,)] = c
            for j, dj in enumerate(dvec):
                rem[k + j] -= c * dj
    if any(rem):
        raise ValueError("나머지가 0이 아닙니다 (정확히 나누어떨어지지 않음).")
    return SparsePolynomial._raw((name,), quotient)


def linear_derivation(
    poly: SparsePolynomial,
    variables: Sequence[str],
    rules: Sequence[Tuple[int, int, Scalar]]
) -> SparsePolynomial:
    """선형 미분 연산자 Σ c · v_target ∂/∂v_source 적용

    Args:
        poly: 대상 다항식 (variables 밖의 변수를 쓰면 안 됨)
        variables: 계수 변수 순서
        rules: (source 인덱스, target 인덱스, 계수 c) 목록

    Raises:
        ValueError: variables에 없는 변수를 사용하는 다항식
    """
    variables = tuple(variables)
    foreign = [v for v in poly.used_variables() if v not in variables]
    if foreign:
        raise ValueError(f"허용되지 않은 변수 {foreign}가 포함되어 있습니다. (허용: {variables[0]}...{variables[-1]})")
    aligned = poly.with_variables(variables)
    rules = [(s, t, to_fraction(c)) for s, t, c in rules if c]
    terms: Dict[Exponent, Fraction] = {}
    for exps, coeff in aligned.terms.items():
        for source, target, factor in rules:
            e = exps[source]
            if not e:
                continue
            new = list(exps)
            new[source] -= 1
            new[target] += 1
            key = tuple(new)
            total = terms.get(key, 0) + coeff * factor * e
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
    return SparsePolynomial._raw(variables, terms)


def collapse(poly: SparsePolynomial) -> Union[SparsePolynomial, Fraction]:
    """상수 다항식이면 Fraction으로, 아니면 그대로 반환"""
    return poly.constant_value() if poly.is_constant() else poly
