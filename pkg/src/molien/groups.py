"""
대칭군 Σ_d 데이터 모듈 (d = 2, 3, 4, 6)

켤레류(순환 유형, 크기), 거듭제곱 사상, 기약 지표를 내장 데이터로 제공합니다.
거듭제곱 사상은 순환 유형에서 유도합니다.
"""
from dataclasses import dataclass, field
from enum import Enum
from math import factorial, gcd
from typing import Dict, List, Sequence, Tuple
import logging

import pandas as pd

logger = logging.getLogger(__name__)

CycleType = Tuple[int, ...]


class SubgroupMode(Enum):
    """몰리엔 평균을 낼 부분군"""
    FULL = "full"   # 전체 대칭군
    EVEN = "even"   # 짝치환(교대군) 켤레류만


@dataclass(frozen=True)
class ConjugacyClass:
    """켤레류 하나"""
    name: str               # 표시 이름 (예: C5)
    cycle_type: CycleType   # 순환 길이 내림차순 (고정점 포함)
    size: int               # 원소 수

    @property
    def is_even(self) -> bool:
        return sum(length - 1 for length in self.cycle_type) % 2 == 0


@dataclass(frozen=True)
class RepresentationCharacter:
    """켤레류별 지표값"""
    name: str                 # 표현 이름 (예: X5)
    values: Tuple[int, ...]   # 켤레류 순서의 지표값

    @property
    def dimension(self) -> int:
        return self.values[0]


@dataclass
class GroupData:
    """유한군의 켤레류, 거듭제곱 사상, 지표표"""
    name: str
    degree: int                                             # 치환하는 점의 수 d
    classes: List[ConjugacyClass]
    characters: Dict[str, Tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        for name, values in self.characters.items():
            if len(values) != len(self.classes):
                raise ValueError(
                    f"지표 {name} 의 값 개수({len(values)})가 켤레류 수({len(self.classes)})와 다릅니다."
                )
        self._by_type = {c.cycle_type: idx for idx, c in enumerate(self.classes)}

    @property
    def order(self) -> int:
        return sum(c.size for c in self.classes)

    @property
    def class_names(self) -> List[str]:
        return [c.name for c in self.classes]

    def class_indices(self, mode: SubgroupMode = SubgroupMode.FULL) -> List[int]:
        if mode == SubgroupMode.EVEN:
            return [i for i, c in enumerate(self.classes) if c.is_even]
        return list(range(len(self.classes)))

    def subgroup_order(self, mode: SubgroupMode = SubgroupMode.FULL) -> int:
        return sum(self.classes[i].size for i in self.class_indices(mode))

    def power_class(self, index: int, k: int) -> int:
        """g 가 index 켤레류일 때 g^k 의 켤레류

        길이 L 순환은 gcd(L, k) 개의 길이 L/gcd(L, k) 순환으로 쪼개집니다.
        """
        parts: List[int] = []
        for length in self.classes[index].cycle_type:
            g = gcd(length, k)
            parts.extend([length // g] * g)
        return self._by_type[tuple(sorted(parts, reverse=True))]

    def power_map(self, k: int) -> List[int]:
        return [self.power_class(i, k) for i in range(len(self.classes))]

    def character(self, name: str) -> RepresentationCharacter:
        if name not in self.characters:
            raise ValueError(
                f"{self.name} 에 없는 지표입니다: {name} (가능: {', '.join(self.characters)})"
            )
        return RepresentationCharacter(name, tuple(self.characters[name]))

    def inner_product(self, chi: Sequence[int], psi: Sequence[int]) -> int:
        """Σ_classes size·χ·ψ (실수 지표)"""
        return sum(c.size * a * b for c, a, b in zip(self.classes, chi, psi))

    def check_orthogonality(self) -> bool:
        """행/열 직교 관계 검사"""
        names = list(self.characters)
        for i, a in enumerate(names):
            for b in names[i:]:
                expected = self.order if a == b else 0
                if self.inner_product(self.characters[a], self.characters[b]) != expected:
                    logger.warning(f"{self.name} 지표 직교성 위반: <{a}, {b}>")
                    return False
        if len(names) == len(self.classes):
            for j, c in enumerate(self.classes):
                for k, other in enumerate(self.classes):
                    total = sum(self.characters[n][j] * self.characters[n][k] for n in names)
                    expected = self.order // c.size if j == k else 0
                    if total != expected:
                        logger.warning(f"{self.name} 열 직교성 위반: {c.name}, {other.name}")
                        return False
        return True


def centralizer_order(cycle_type: CycleType) -> int:
    """z_λ = Π_L L^(m_L) · m_L!"""
    result = 1
    for length in set(cycle_type):
        m = cycle_type.count(length)
        result *= length ** m * factorial(m)
    return result


def _build(name: str, degree: int, cycle_types: Sequence[CycleType], characters: Dict[str, Tuple[int, ...]]) -> GroupData:
    classes = [
        ConjugacyClass(f"C{i + 1}", tuple(ct), factorial(degree) // centralizer_order(tuple(ct)))
        for i, ct in enumerate(cycle_types)
    ]
    return GroupData(name, degree, classes, dict(characters))


# --- 내장 데이터 ---

_S2_TYPES = [(1, 1), (2,)]
_S2_CHARACTERS = {
    "trivial": (1, 1),
    "sign": (1, -1),
}

_S3_TYPES = [(1, 1, 1), (2, 1), (3,)]
_S3_CHARACTERS = {
    "trivial": (1, 1, 1),
    "sign": (1, -1, 1),
    "standard": (2, 0, -1),
}

# id, (12), (12)(34), (123), (1234)
_S4_TYPES = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
_S4_CHARACTERS = {
    "trivial": (1, 1, 1, 1, 1),
    "sign": (1, -1, 1, 1, -1),
    "W": (2, 0, 2, -1, 0),          # 네 점의 교차 불변식 j0, j1 이 펼치는 표현
    "standard": (3, 1, -1, 0, -1),
    "standard_sign": (3, -1, -1, 0, 1),
}

# 1^6, 2·1^4, 2²1², 2³, 3·1³, 3·2·1, 3², 4·1², 4·2, 5·1, 6
_S6_TYPES = [
    (1, 1, 1, 1, 1, 1), (2, 1, 1, 1, 1), (2, 2, 1, 1), (2, 2, 2), (3, 1, 1, 1),
    (3, 2, 1), (3, 3), (4, 1, 1), (4, 2), (5, 1), (6,),
]
_S6_CHARACTERS = {
    "X1": (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    "X2": (5, 3, 1, -1, 2, 0, -1, 1, -1, 0, -1),
    "X3": (9, 3, 1, 3, 0, 0, 0, -1, 1, -1, 0),
    "X4": (10, 2, -2, -2, 1, -1, 1, 0, 0, 0, 1),
    "X5": (5, 1, 1, -3, -1, 1, 2, -1, -1, 0, 0),
    "X6": (16, 0, 0, 0, -2, 0, -2, 0, 0, 1, 0),
    "X7": (10, -2, -2, 2, 1, 1, 1, 0, 0, 0, -1),
    "X8": (5, -1, 1, 3, -1, -1, 2, 1, -1, 0, 0),
    "X9": (9, -3, 1, -3, 0, 0, 0, 1, 1, -1, 0),
    "X10": (5, -3, 1, 1, 2, 0, -1, -1, -1, 0, 1),
    "X11": (1, -1, 1, -1, 1, -1, 1, -1, 1, 1, -1),
}

_GROUP_TABLE = {
    "S2": (2, _S2_TYPES, _S2_CHARACTERS),
    "S3": (3, _S3_TYPES, _S3_CHARACTERS),
    "S4": (4, _S4_TYPES, _S4_CHARACTERS),
    "S6": (6, _S6_TYPES, _S6_CHARACTERS),
}

# 교대군 이름 → (대칭군, 부분군 모드)
_ALTERNATING = {"A3": "S3", "A4": "S4", "A6": "S6"}


def available_groups() -> List[str]:
    return list(_GROUP_TABLE) + list(_ALTERNATING)


def get_group(name: str) -> Tuple[GroupData, SubgroupMode]:
    """이름으로 군 데이터 조회 (A4, A6 은 대칭군의 짝 켤레류로 표현)

    Raises:
        ValueError: 알 수 없는 군 이름
    """
    key = name.upper()
    mode = SubgroupMode.FULL
    if key in _ALTERNATING:
        key, mode = _ALTERNATING[key], SubgroupMode.EVEN
    if key not in _GROUP_TABLE:
        raise ValueError(f"지원하지 않는 군입니다: {name} (가능: {', '.join(available_groups())})")
    degree, types, characters = _GROUP_TABLE[key]
    return _build(key, degree, types, characters), mode


def symmetric_group(d: int) -> GroupData:
    return get_group(f"S{d}")[0]


def character_table_df(group: GroupData) -> pd.DataFrame:
    """지표표 (행: 기약 표현, 열: 켤레류) 와 크기/순환 유형 머리행"""
    df = pd.DataFrame(
        {c.name: [group.characters[n][i] for n in group.characters] for i, c in enumerate(group.classes)},
        index=list(group.characters),
    )
    df.loc["size"] = [c.size for c in group.classes]
    return df


def power_map_df(group: GroupData, max_power: int = None) -> pd.DataFrame:
    """거듭제곱 사상표 (행: g^k, 열: 켤레류)"""
    max_power = max_power or group.degree - 1
    return pd.DataFrame(
        {c.name: [group.classes[group.power_class(i, k)].name for k in range(2, max_power + 1)]
         for i, c in enumerate(group.classes)},
        index=[f"g^{k}" for k in range(2, max_power + 1)],
    )
