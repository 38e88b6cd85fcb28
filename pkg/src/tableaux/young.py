"""
영 도형과 타블로 모듈

반표준(semistandard) 타블로와 표준 타블로의 열거를 제공합니다.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union
import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class YoungDiagram:
    """약감소 양의 정수 부분으로 이루어진 영 도형"""
    parts: Tuple[int, ...]  # λ1 >= λ2 >= ... > 0

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"영 도형의 부분은 양수여야 합니다: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"영 도형의 부분은 약감소해야 합니다: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, shape: Union["YoungDiagram", Sequence[int]]) -> "YoungDiagram":
        if isinstance(shape, YoungDiagram):
            return shape
        return cls(tuple(p for p in shape if p))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def n_rows(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "YoungDiagram":
        if not self.parts:
            return self
        return YoungDiagram(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def is_rectangular(self) -> bool:
        return len(set(self.parts)) <= 1


@dataclass(frozen=True)
class Tableau:
    """영 도형의 채움 (행 목록)"""
    rows: Tuple[Tuple[int, ...], ...]  # t(i, j)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        YoungDiagram(tuple(len(r) for r in rows))
        if any(x <= 0 for row in rows for x in row):
            raise ValueError(f"타블로의 항목은 양의 정수여야 합니다: {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    def columns(self) -> List[Tuple[int, ...]]:
        width = len(self.rows[0]) if self.rows else 0
        return [tuple(row[j] for row in self.rows if j < len(row)) for j in range(width)]

    def content(self) -> Dict[int, int]:
        return dict(sorted(Counter(x for row in self.rows for x in row).items()))

    def is_semistandard(self) -> bool:
        rows_ok = all(row[j] <= row[j + 1] for row in self.rows for j in range(len(row) - 1))
        cols_ok = all(col[i] < col[i + 1] for col in self.columns() for i in range(len(col) - 1))
        return rows_ok and cols_ok

    def is_standard(self) -> bool:
        entries = sorted(x for row in self.rows for x in row)
        return self.is_semistandard() and entries == list(range(1, len(entries) + 1))

    def __str__(self) -> str:
        return ",".join("".join(str(x) for x in row) for row in self.rows)


def parse_tableau(text: str) -> Tableau:
    """'111122,223333' 형식 (행은 쉼표 구분, 항목은 한 자리 숫자)

    Raises:
        ValueError: 숫자가 아닌 문자 또는 영 도형이 아닌 모양
    """
    rows = [r.strip() for r in text.strip().split(",") if r.strip()]
    if not rows:
        raise ValueError(f"빈 타블로 문자열입니다: {text!r}")
    for row in rows:
        if not row.isdigit():
            raise ValueError(f"타블로 행은 숫자로만 이루어져야 합니다: {row!r}")
    return Tableau.from_rows([[int(ch) for ch in row] for row in rows])


def semistandard_tableaux(
    shape: Union[YoungDiagram, Sequence[int]],
    content: Optional[Union[Mapping[int, int], Sequence[int]]] = None,
    max_label: Optional[int] = None
) -> List[Tableau]:
    """반표준 타블로 (행 약증가, 열 강증가) 의 사전식 열거

    Args:
        shape: 영 도형
        content: 각 항목의 사용 횟수 (라벨 목록 또는 {라벨: 횟수})
        max_label: content 가 없을 때 사용할 라벨 상한 (1..max_label)

    Raises:
        ValueError: content 와 max_label 이 모두 없는 경우
    """
    diagram = YoungDiagram.of(shape)
    if content is None:
        if max_label is None:
            raise ValueError("content 또는 max_label 중 하나는 지정해야 합니다.")
        counts = None
        labels = list(range(1, max_label + 1))
    else:
        counts = dict(Counter(content)) if not isinstance(content, Mapping) else {k: v for k, v in content.items() if v}
        if sum(counts.values()) != diagram.size:
            return []
        labels = sorted(counts)

    cells = [(r, c) for r, length in enumerate(diagram.parts) for c in range(length)]
    grid = [[0] * length for length in diagram.parts]
    results: List[Tableau] = []

    def backtrack(pos: int):
        if pos == len(cells):
            results.append(Tableau.from_rows(grid))
            return
        r, c = cells[pos]
        low = grid[r][c - 1] if c > 0 else 0
        if r > 0:
            low = max(low, grid[r - 1][c] + 1)
        for label in labels:
            if label < low:
                continue
            if counts is not None:
                if not counts[label]:
                    continue
                counts[label] -= 1
            grid[r][c] = label
            backtrack(pos + 1)
            grid[r][c] = 0
            if counts is not None:
                counts[label] += 1

    backtrack(0)
    logger.debug(f"반표준 타블로 열거: 모양 {diagram.parts}, {len(results)}개")
    return results


def standard_tableaux_count(shape: Union[YoungDiagram, Sequence[int]]) -> int:
    """1..|λ| 를 한 번씩 쓰는 표준 타블로 개수 (직접 열거)"""
    diagram = YoungDiagram.of(shape)
    return len(semistandard_tableaux(diagram, content=list(range(1, diagram.size + 1))))
