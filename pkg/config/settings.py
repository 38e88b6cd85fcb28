"""
Kinvar 프로젝트 설정 파일
"""
import os
from typing import Optional

# 대수 엔진 상수
ALGEBRA_CONSTANTS = {
    "default_truncation": 20,                 # 급수 절단 기본 차수 (총차수 기준)
    "truncation_env_var": "KINVAR_TRUNCATION",  # 기본 절단 차수를 덮어쓰는 환경변수
    "max_straighten_steps": 200_000,          # 직선화(straightening) 최대 반복 횟수
    "aronhold_pfaffian_ratio": -3,            # 파피안 / 커널 방법 아론홀드 불변식 (기록된 비례 상수)
}

# 무작위 검증 기본값
VERIFICATION_DEFAULTS = {
    "random_seed": 2024,              # 무작위 구성 샘플링 시드
    "random_trials": 20,              # 항등식 검증 반복 횟수
    "evaluation_trials": 100,         # 평가 보존 검증 반복 횟수
    "rational_numerator_range": 9,    # 분자 범위 (-9 ~ 9)
    "rational_denominator_max": 5,    # 분모 최대값 (1 ~ 5)
}

# CLI 상수
CLI_CONSTANTS = {
    "exit_codes": {
        "ok": 0,                      # 성공
        "usage_error": 1,             # 잘못된 사용법
        "verification_failure": 2,    # 검증 실패
    },
    "output_formats": ["human", "json"],
    "default_format": "human",
}

# 기호(미지수) 이름 규칙
SYMBOL_NAMES = {
    "binary_coefficient": "a",        # 이진 형식 계수 a0 ... ad
    "ternary_coefficient": "f",       # 삼진 형식 계수 f400, f310, ...
    "binary_variables": ("x", "y"),
    "ternary_variables": ("x0", "x1", "x2"),
    "series_variable": "t",
    "springer_variables": ("z", "w"),
    "bedratyuk_variables": ("x1", "x2", "y"),
}


def resolve_truncation(value: Optional[int] = None) -> int:
    """절단 차수 결정

    명시값 > 환경변수 > 기본값 순으로 사용합니다.

    Raises:
        ValueError: 음수이거나 정수가 아닌 값
    """
    if value is None:
        raw = os.environ.get(ALGEBRA_CONSTANTS["truncation_env_var"])
        if raw is None or raw.strip() == "":
            return ALGEBRA_CONSTANTS["default_truncation"]
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(
                f"{ALGEBRA_CONSTANTS['truncation_env_var']} 값이 정수가 아닙니다: {raw!r}"
            )
    if value < 0:
        raise ValueError(f"절단 차수는 0 이상이어야 합니다. (입력: {value})")
    return value
