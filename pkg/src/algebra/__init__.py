"""
Kinvar 정확 대수 모듈

유리수 계수 희소 다항식, 절단 멱급수, 정확한 선형대수를 제공합니다.
"""

from .polynomial import SparsePolynomial, symbols, to_fraction, univariate_exact_divide
from .series import (
    TruncatedSeries,
    one_minus,
    rational_series,
    series_inverse_factor,
    series_matches_rational,
)
from .linalg import ExactMatrix, determinant, kernel_basis, pfaffian

__all__ = [
    'SparsePolynomial', 'symbols', 'to_fraction', 'univariate_exact_divide',
    'TruncatedSeries', 'one_minus', 'rational_series', 'series_inverse_factor',
    'series_matches_rational',
    'ExactMatrix', 'determinant', 'kernel_basis', 'pfaffian',
]
