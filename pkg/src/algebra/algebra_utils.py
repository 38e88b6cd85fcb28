"""
대수 공통 유틸리티

무작위 유리수 샘플링, 이항계수, 조합 열거 등
여러 모듈에서 공통으로 사용하는 함수입니다.
"""
from fractions import Fraction
from math import comb, factorial
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config.settings import VERIFICATION_DEFAULTS


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    """시드 고정 난수 생성기 (기본 시드는 설정값)"""
    if seed is None:
        seed = VERIFICATION_DEFAULTS["random_seed"]
    return np.random.default_rng(seed)


def random_rational(
    rng: np.random.Generator,
    numerator_range: Optional[int] = None,
    denominator_max: Optional[int] = None,
    nonzero: bool = False
) -> Fraction:
    """작은 분자/분모를 가진 무작위 유리수"""
    if numerator_range is None:
        numerator_range = VERIFICATION_DEFAULTS["rational_numerator_range"]
    if denominator_max is None:
        denominator_max = VERIFICATION_DEFAULTS["rational_denominator_max"]
    while True:
        num = int(rng.integers(-numerator_range, numerator_range + 1))
        den = int(rng.integers(1, denominator_max + 1))
        if num or not nonzero:
            return Fraction(num, den)


def random_rational_vector(rng: np.random.Generator, size: int, **kwargs) -> List[Fraction]:
    return [random_rational(rng, **kwargs) for _ in range(size)]


def binomial(a: int, b: int) -> int:
    """이항계수 (a < b 또는 b < 0 이면 0)"""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def multinomial(exponents: Sequence[int]) -> int:
    """다항계수 (Σe)! / Π e_i!"""
    result = factorial(sum(exponents))
    for e in exponents:
        result //= factorial(e)
    return result


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def compositions(total: int, parts: int) -> List[Tuple[int, ...]]:
    """합이 total인 길이 parts의 음이 아닌 정수 튜플 (사전식 내림차순)"""
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)]
    result = []
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            result.append((first,) + rest)
    return result


def permutation_sign(perm: Sequence[int]) -> int:
    """순열의 부호 (+1 / -1)"""
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign

