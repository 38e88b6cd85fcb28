"""
브래킷 다항식 모듈

- 브래킷 단항식/다항식 (열 정렬 + 부호 추적 정규형)
- 플뤼커 직선화 (반표준 단항식 기저로의 환원)
- 기호 표현: 타블로 함수를 형식 계수의 다항식으로 전개
"""
from fractions import Fraction
from itertools import combinations
import re
from typing import Dict, List, Optional, Sequence, Tuple, Union
import logging

from config.settings import ALGEBRA_CONSTANTS
from src.algebra.algebra_utils import compositions, permutation_sign
from src.algebra.linalg import determinant
from src.algebra.polynomial import Scalar, SparsePolynomial, collapse, to_fraction
from src.forms.binary_form import BinaryForm
from src.forms.ternary_form import TernaryForm
from src.tableaux.young import Tableau

logger = logging.getLogger(__name__)

Column = Tuple[int, ...]
Monomial = Tuple[Column, ...]


def normalize_column(column: Sequence[int]) -> Optional[Tuple[Column, int]]:
    """(정렬된 열, 부호), 라벨이 반복되면 None"""
    column = tuple(column)
    if len(set(column)) != len(column):
        return None
    order = sorted(range(len(column)), key=lambda i: column[i])
    return tuple(column[i] for i in order), permutation_sign(order)


class BracketExpression:
    """브래킷 단항식의 유리수 계수 선형결합

    각 단항식은 정렬된 열들의 사전식 정렬 튜플입니다.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, Scalar]] = None):
        self.terms: Dict[Monomial, Fraction] = {}
        for monomial, coeff in (terms or {}).items():
            self._accumulate(monomial, to_fraction(coeff))

    def _accumulate(self, columns: Sequence[Sequence[int]], coeff: Fraction):
        sign = 1
        normalized = []
        for col in columns:
            result = normalize_column(col)
            if result is None:
                return
            sorted_col, s = result
            normalized.append(sorted_col)
            sign *= s
        key = tuple(sorted(normalized))
        total = self.terms.get(key, 0) + coeff * sign
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    @classmethod
    def monomial(cls, columns: Sequence[Sequence[int]], coefficient: Scalar = 1) -> "BracketExpression":
        expr = cls()
        expr._accumulate(columns, to_fraction(coefficient))
        return expr

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "BracketExpression") -> "BracketExpression":
        result = BracketExpression()
        result.terms = dict(self.terms)
        for m, c in other.terms.items():
            result._accumulate(m, c)
        return result

    def __neg__(self) -> "BracketExpression":
        result = BracketExpression()
        result.terms = {m: -c for m, c in self.terms.items()}
        return result

    def __sub__(self, other: "BracketExpression") -> "BracketExpression":
        return self + (-other)

    def __mul__(self, other) -> "BracketExpression":
        result = BracketExpression()
        if isinstance(other, BracketExpression):
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    result._accumulate(m1 + m2, c1 * c2)
            return result
        scalar = to_fraction(other)
        if scalar:
            result.terms = {m: c * scalar for m, c in self.terms.items()}
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BracketExpression":
        result = BracketExpression.monomial([], 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BracketExpression):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def column_length(self) -> Optional[int]:
        lengths = {len(col) for m in self.terms for col in m}
        if len(lengths) > 1:
            raise ValueError(f"열 길이가 일정하지 않습니다: {sorted(lengths)}")
        return lengths.pop() if lengths else None

    def evaluate(self, points: Dict[int, Sequence[Scalar]]) -> Fraction:
        """라벨 → 좌표 대입 후 각 열의 행렬식 곱의 합"""
        total = Fraction(0)
        cache: Dict[Column, Fraction] = {}
        for m, c in self.terms.items():
            value = c
            for col in m:
                if col not in cache:
                    cache[col] = determinant([[to_fraction(x) for x in points[label]] for label in col])
                value *= cache[col]
                if not value:
                    break
            total += value
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            body = "".join(_format_column(col) for col in m) or "1"
            magnitude = abs(c)
            text = body if magnitude == 1 else f"{magnitude}{body}"
            parts.append(("-" if c < 0 else "+", text))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"BracketExpression({self})"


def _format_column(col: Column) -> str:
    sep = "," if any(x > 9 for x in col) else ""
    return "[" + sep.join(str(x) for x in col) + "]"


_TERM_PATTERN = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*((?:\[[\d,\s]+\](?:\^\d+)?)+)")


def parse_bracket_expression(text: str) -> BracketExpression:
    """'[13][24] - 2[12][34]', '[12]^4' 형식 파싱

    Raises:
        ValueError: 해석할 수 없는 문자열
    """
    source = text.strip()
    if not source:
        raise ValueError("빈 브래킷 식입니다.")
    result = BracketExpression()
    pos = 0
    while pos < len(source):
        match = _TERM_PATTERN.match(source, pos)
        if not match or match.end() == pos:
            raise ValueError(f"브래킷 식을 해석할 수 없습니다: {source[pos:]!r}")
        sign, coeff, body = match.groups()
        if pos > 0 and not sign:
            raise ValueError(f"항 사이에 + 또는 - 가 필요합니다: {source[pos:]!r}")
        value = to_fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            value = -value
        columns: List[Column] = []
        for inner, power in re.findall(r"\[([\d,\s]+)\](?:\^(\d+))?", body):
            labels = [int(x) for x in inner.split(",")] if "," in inner else [int(ch) for ch in inner if ch.isdigit()]
            columns.extend([tuple(labels)] * (int(power) if power else 1))
        result = result + BracketExpression.monomial(columns, value)
        pos = match.end()
        while pos < len(source) and source[pos].isspace():
            pos += 1
    return result


def tableau_to_bracket(tableau: Tableau) -> BracketExpression:
    """직사각형 타블로의 열 행렬식 곱

    Raises:
        ValueError: 직사각형이 아닌 타블로
    """
    if not tableau.shape.is_rectangular():
        raise ValueError(f"직사각형 타블로만 브래킷으로 변환할 수 있습니다: 모양 {tableau.shape.parts}")
    return BracketExpression.monomial(tableau.columns())


# --- 플뤼커 직선화 ---

def _first_violation(monomial: Monomial) -> Optional[Tuple[int, int]]:
    """(열 위치 k, 행 r): monomial[k][r] > monomial[k+1][r] 인 첫 위치"""
    for k in range(len(monomial) - 1):
        c1, c2 = monomial[k], monomial[k + 1]
        for r in range(len(c1)):
            if c1[r] > c2[r]:
                return k, r
    return None


def is_standard_monomial(monomial: Monomial) -> bool:
    """열을 나란히 놓은 배열의 각 행이 약증가하면 표준"""
    return _first_violation(monomial) is None


def _pluecker_exchange(monomial: Monomial, k: int, r: int) -> Dict[Monomial, int]:
    """[c1][c2] = -Σ_{X≠A} sgn · [c1[:r] X][(S∖X) c2[r+1:]] 를 단항식에 적용"""
    c1, c2 = monomial[k], monomial[k + 1]
    rest = monomial[:k] + monomial[k + 2:]
    A = c1[r:]
    B = c2[:r + 1]
    S = A + B
    replaced = BracketExpression()
    for chosen in combinations(range(len(S)), len(A)):
        if chosen == tuple(range(len(A))):
            continue
        others = tuple(i for i in range(len(S)) if i not in chosen)
        sign = permutation_sign(chosen + others)
        X = tuple(S[i] for i in chosen)
        Y = tuple(S[i] for i in others)
        replaced._accumulate(rest + (c1[:r] + X, Y + c2[r + 1:]), Fraction(-sign))
    return replaced.terms


def pluecker_straighten(expression: BracketExpression, max_steps: Optional[int] = None) -> BracketExpression:
    """플뤼커 관계로 반표준 단항식 기저에 환원 (멱등)

    Raises:
        RuntimeError: 최대 반복 횟수 초과
    """
    if max_steps is None:
        max_steps = ALGEBRA_CONSTANTS["max_straighten_steps"]
    expression.column_length()
    current: Dict[Monomial, Fraction] = dict(expression.terms)
    steps = 0
    while True:
        pending = [m for m in current if not is_standard_monomial(m)]
        if not pending:
            break
        steps += 1
        if steps > max_steps:
            raise RuntimeError(f"직선화가 {max_steps}회 안에 끝나지 않았습니다.")
        target = max(pending)
        coeff = current.pop(target)
        k, r = _first_violation(target)
        for m, c in _pluecker_exchange(target, k, r).items():
            total = current.get(m, 0) + coeff * c
            if total:
                current[m] = total
            else:
                current.pop(m, None)
    logger.debug(f"플뤼커 직선화 완료: {steps}단계, 항 {len(current)}개")
    result = BracketExpression()
    result.terms = current
    return result


# --- 기호 표현 ---

def _symbol_names(label: int, n: int) -> Tuple[str, ...]:
    return tuple(f"b{label}_{j}" for j in range(n + 1))


def _power_coefficient(form: Union[BinaryForm, TernaryForm], alpha: Tuple[int, ...]) -> SparsePolynomial:
    if isinstance(form, BinaryForm):
        return form.coefficient(alpha[1])
    return form.coefficient(alpha)


def _expand_tableau(tableau: Tableau, forms: Dict[int, Union[BinaryForm, TernaryForm]]) -> SparsePolynomial:
    """열 행렬식을 차례로 곱하고, 라벨의 마지막 열 직후 b_k^α ↦ (형식 계수 α) 로 축약"""
    columns = tableau.columns()
    n = len(columns[0]) - 1
    last_column = {}
    for j, col in enumerate(columns):
        for label in col:
            last_column[label] = j
    result = SparsePolynomial.constant(1)
    for j, col in enumerate(columns):
        matrix = [[SparsePolynomial.variable(name) for name in _symbol_names(label, n)] for label in col]
        result = result * determinant(matrix)
        for label in sorted(set(col)):
            if last_column[label] != j:
                continue
            names = _symbol_names(label, n)
            form = forms[label]
            contracted = SparsePolynomial.zero()
            for alpha in compositions(form.degree, n + 1):
                part = result.coefficient_of(names, alpha)
                if part:
                    contracted = contracted + part * _power_coefficient(form, alpha)
            result = contracted
        if result.is_zero():
            break
    return result


def _check_rectangular(tableau: Tableau, n: Optional[int] = None) -> int:
    shape = tableau.shape
    if not shape.is_rectangular():
        raise ValueError(f"직사각형 타블로가 필요합니다: 모양 {shape.parts}")
    if n is not None and shape.n_rows != n + 1:
        raise ValueError(f"타블로의 행 수({shape.n_rows})가 n+1={n + 1} 과 다릅니다.")
    return shape.n_rows - 1


def symbolic_invariant(tableau: Tableau, d: int, m: int, n: int) -> SparsePolynomial:
    """대칭화 타블로 함수 F_T (형식 계수 a_i 또는 f_α 의 다항식)

    Raises:
        ValueError: 직사각형이 아니거나 라벨 1..m 이 각각 d 번 나오지 않는 경우
    """
    _check_rectangular(tableau, n)
    content = tableau.content()
    expected = {label: d for label in range(1, m + 1)}
    if content != expected:
        raise ValueError(f"라벨 1..{m} 이 각각 {d}번 나와야 합니다: {content}")
    if n == 1:
        form = BinaryForm.symbolic(d)
    elif n == 2:
        form = TernaryForm.symbolic(d)
    else:
        raise ValueError(f"n 은 1 (이진) 또는 2 (삼진) 이어야 합니다. (입력: {n})")
    result = _expand_tableau(tableau, {label: form for label in range(1, m + 1)})
    logger.info(f"기호 전개 완료: 타블로 {tableau}, 항 {len(result)}개")
    return result


def tableau_multilinear(tableau: Tableau, forms: Sequence[Union[BinaryForm, TernaryForm]]) -> Union[Fraction, SparsePolynomial]:
    """라벨 k 에 forms[k-1] 을 대입한 다중선형 타블로 함수 G_T

    Raises:
        ValueError: 라벨 수와 형식 수가 다르거나 라벨 횟수가 형식 차수와 다른 경우
    """
    _check_rectangular(tableau)
    content = tableau.content()
    if sorted(content) != list(range(1, len(forms) + 1)):
        raise ValueError(f"라벨 1..{len(forms)} 이 모두 나와야 합니다: {sorted(content)}")
    for label, count in content.items():
        if forms[label - 1].degree != count:
            raise ValueError(
                f"라벨 {label} 의 횟수({count})가 형식 차수({forms[label - 1].degree})와 다릅니다."
            )
    return collapse(_expand_tableau(tableau, {k + 1: f for k, f in enumerate(forms)}))
