"""
정확한 선형대수 모듈

유리수 가우스 소거 기반의 커널(영공간), 계수, 행렬식과
임의 환 원소(다항식 포함)에 대한 행렬식/파피안을 제공합니다.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple
import logging

from src.algebra.polynomial import SparsePolynomial, to_fraction

logger = logging.getLogger(__name__)


class ExactMatrix:
    """유리수 행렬

    Attributes:
        rows: Fraction 행 튜플의 튜플
        n_rows, n_cols: 크기
    """

    __slots__ = ("rows", "n_rows", "n_cols")

    def __init__(self, rows: Sequence[Sequence], n_cols: Optional[int] = None):
        self.rows: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(to_fraction(x) for x in row) for row in rows
        )
        self.n_rows = len(self.rows)
        if self.rows:
            widths = {len(row) for row in self.rows}
            if len(widths) != 1:
                raise ValueError(f"행 길이가 일정하지 않습니다: {sorted(widths)}")
            width = widths.pop()
            if n_cols is not None and n_cols != width:
                raise ValueError(f"열 개수 불일치: 지정 {n_cols}, 실제 {width}")
            self.n_cols = width
        else:
            if n_cols is None:
                raise ValueError("빈 행렬은 열 개수(n_cols)를 지정해야 합니다.")
            self.n_cols = n_cols

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.n_rows, self.n_cols)

    def apply(self, vector: Sequence) -> List[Fraction]:
        """행렬 · 벡터"""
        if len(vector) != self.n_cols:
            raise ValueError(f"벡터 길이({len(vector)})가 열 개수({self.n_cols})와 다릅니다.")
        vector = [to_fraction(v) for v in vector]
        return [sum((a * v for a, v in zip(row, vector) if a and v), Fraction(0)) for row in self.rows]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.n_cols != other.n_rows:
            raise ValueError(f"행렬 곱 크기 불일치: {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else []
        return ExactMatrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self.rows],
            n_cols=other.n_cols,
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(col) for col in zip(*self.rows)], n_cols=self.n_rows) if self.rows \
            else ExactMatrix([[] for _ in range(self.n_cols)], n_cols=0)

    def is_symmetric(self) -> bool:
        return self.n_rows == self.n_cols and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.n_rows) for j in range(i)
        )

    def rref(self) -> Tuple[List[Dict[int, Fraction]], List[int]]:
        """기약 행사다리꼴 (희소 행 표현, 피벗 열 목록)"""
        rows = [{j: x for j, x in enumerate(row) if x} for row in self.rows]
        return _sparse_rref(rows, self.n_cols)

    def rank(self) -> int:
        return len(self.rref()[1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    __hash__ = None

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"ExactMatrix[{self.n_rows}x{self.n_cols}]({body})"


def _sparse_rref(rows: List[Dict[int, Fraction]], n_cols: int) -> Tuple[List[Dict[int, Fraction]], List[int]]:
    """희소 행에 대한 유리수 가우스-조던 소거"""
    rows = [dict(r) for r in rows if r]
    pivots: List[int] = []
    reduced: List[Dict[int, Fraction]] = []
    for col in range(n_cols):
        pivot_idx = next((i for i, r in enumerate(rows) if col in r), None)
        if pivot_idx is None:
            continue
        pivot_row = rows.pop(pivot_idx)
        inv = 1 / pivot_row[col]
        pivot_row = {j: x * inv for j, x in pivot_row.items()}
        for collection in (rows, reduced):
            for r in collection:
                factor = r.get(col)
                if factor:
                    for j, x in pivot_row.items():
                        value = r.get(j, 0) - factor * x
                        if value:
                            r[j] = value
                        else:
                            r.pop(j, None)
        rows = [r for r in rows if r]
        reduced.append(pivot_row)
        pivots.append(col)
    return reduced, pivots


def kernel_basis(m: ExactMatrix) -> List[List[Fraction]]:
    """영공간 기저 (기약 사다리꼴, 가장 왼쪽 피벗 우선, 첫 비영 성분 = 1)

    Raises:
        RuntimeError: 계수 + 퇴화차수 검증 실패 (내부 오류)
    """
    n = m.n_cols
    reduced, pivots = m.rref()
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    raw: List[Dict[int, Fraction]] = []
    for f in free:
        vec = {f: Fraction(1)}
        for row, p in zip(reduced, pivots):
            x = row.get(f)
            if x:
                vec[p] = -x
        raw.append(vec)
    # 커널 벡터들을 다시 기약 사다리꼴로 정규화
    basis_rows, _ = _sparse_rref(raw, n)
    basis = [[row.get(j, Fraction(0)) for j in range(n)] for row in basis_rows]

    if len(pivots) + len(basis) != n:
        raise RuntimeError(f"계수({len(pivots)}) + 퇴화차수({len(basis)}) != 열 개수({n})")
    for vec in basis:
        if any(m.apply(vec)):
            raise RuntimeError("커널 벡터 검증 실패: m·v != 0")
    logger.debug(f"커널 계산 완료: 크기 {m.shape}, 계수 {len(pivots)}, 퇴화차수 {len(basis)}")
    return basis


def _is_scalar(entry) -> bool:
    if isinstance(entry, SparsePolynomial):
        return False
    try:
        to_fraction(entry)
        return True
    except ValueError:
        return False


def _fraction_determinant(rows: List[List[Fraction]]) -> Fraction:
    n = len(rows)
    a = [list(r) for r in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for i in range(col + 1, n):
            factor = a[i][col] * inv
            if factor:
                for j in range(col, n):
                    a[i][j] -= factor * a[col][j]
    return det


def determinant(matrix):
    """정사각 행렬의 행렬식

    유리수 성분은 가우스 소거, 다항식 성분은 메모이제이션 라플라스 전개를 사용합니다.

    Raises:
        ValueError: 정사각 행렬이 아닌 경우
    """
    rows = [list(r) for r in (matrix.rows if isinstance(matrix, ExactMatrix) else matrix)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError(f"정사각 행렬이 아닙니다: {n}행, 열 {sorted({len(r) for r in rows})}")
    if n == 0:
        return Fraction(1)
    if all(_is_scalar(x) for r in rows for x in r):
        return _fraction_determinant([[to_fraction(x) for x in r] for r in rows])

    @lru_cache(maxsize=None)
    def minor(row: int, cols: Tuple[int, ...]):
        if row == n:
            return 1
        total = 0
        for k, c in enumerate(cols):
            entry = rows[row][c]
            if isinstance(entry, SparsePolynomial) and entry.is_zero():
                continue
            if not isinstance(entry, SparsePolynomial) and not entry:
                continue
            sub = minor(row + 1, cols[:k] + cols[k + 1:])
            term = entry * sub
            total = total + term if k % 2 == 0 else total - term
        return total

    result = minor(0, tuple(range(n)))
    return result if isinstance(result, SparsePolynomial) else to_fraction(result)


def pfaffian(matrix):
    """교대 행렬의 파피안 (첫 행 재귀 전개, 성분 환에 대해 일반적)

    Raises:
        ValueError: 교대 행렬이 아닌 경우
    """
    rows = [list(r) for r in (matrix.rows if isinstance(matrix, ExactMatrix) else matrix)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError(f"정사각 행렬이 아닙니다: {n}행")
    for i in range(n):
        if rows[i][i] != 0:
            raise ValueError(f"교대 행렬의 대각 성분은 0이어야 합니다: ({i},{i})")
        for j in range(i):
            if rows[i][j] != -rows[j][i]:
                raise ValueError(f"교대 행렬이 아닙니다: ({i},{j}) 성분이 ({j},{i})의 부호 반대가 아님")
    if n % 2:
        return Fraction(0)

    @lru_cache(maxsize=None)
    def pf(indices: Tuple[int, ...]):
        if not indices:
            return 1
        first, rest = indices[0], indices[1:]
        total = 0
        for k, j in enumerate(rest):
            entry = rows[first][j]
            if isinstance(entry, SparsePolynomial) and entry.is_zero():
                continue
            if not isinstance(entry, SparsePolynomial) and not entry:
                continue
            term = entry * pf(rest[:k] + rest[k + 1:])
            total = total + term if k % 2 == 0 else total - term
        return total

    result = pf(tuple(range(n)))
    return result if isinstance(result, SparsePolynomial) else to_fraction(result)


def solve(m: ExactMatrix, rhs: Sequence) -> List[Fraction]:
    """m·x = rhs 의 특수해 (자유 변수는 0)

    Raises:
        ValueError: 해가 없는 경우
    """
    if len(rhs) != m.n_rows:
        raise ValueError(f"우변 길이({len(rhs)})가 행 개수({m.n_rows})와 다릅니다.")
    n = m.n_cols
    augmented = [
        {**{j: x for j, x in enumerate(row) if x}, **({n: to_fraction(b)} if to_fraction(b) else {})}
        for row, b in zip(m.rows, rhs)
    ]
    reduced, pivots = _sparse_rref(augmented, n + 1)
    if n in pivots:
        raise ValueError("연립방정식의 해가 존재하지 않습니다.")
    solution = [Fraction(0)] * n
    for row, p in zip(reduced, pivots):
        solution[p] = row.get(n, Fraction(0))
    return solution
