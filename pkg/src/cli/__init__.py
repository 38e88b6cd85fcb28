"""
Kinvar 명령행 모듈

- main: argparse 기반 하위 명령 (계산, 검증, 회귀 검사)
- selftest: 공개 상수 회귀 검사
- serialization: 정확한 JSON 직렬화
"""

from .main import JobResult, OutputFormat, build_parser, main
from .selftest import SELFTEST_CHECKS, SelftestCheck, run_selftest
from .serialization import (
    dumps,
    fraction_from_json,
    fraction_to_json,
    polynomial_from_json,
    polynomial_to_json,
    series_from_json,
    series_to_json,
    to_jsonable,
)

__all__ = [
    'JobResult', 'OutputFormat', 'build_parser', 'main',
    'SELFTEST_CHECKS', 'SelftestCheck', 'run_selftest',
    'dumps', 'fraction_from_json', 'fraction_to_json', 'polynomial_from_json',
    'polynomial_to_json', 'series_from_json', 'series_to_json', 'to_jsonable',
]
