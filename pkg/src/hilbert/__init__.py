"""
Kinvar 힐베르트 급수 모듈

불변식/공변식 개수 세기(케일리-실베스터, 베드라튝, 하우)와
스프링거-브리옹 생성 함수를 제공합니다.
"""

from .counting import (
    bedratyuk_h,
    bedratyuk_invariant_dim,
    bedratyuk_table,
    binary_invariant_dim,
    cayley_sylvester_polynomial,
    covariant_multiplicities,
    hermite_reciprocity,
    howe_dimension,
    howe_series,
    partition_count_series,
    ternary_weight_enumerator,
    weight_space_dims,
)
from .springer import (
    covariant_table,
    gamma_series,
    phi_j,
    springer_bigraded,
    springer_covariant_series,
)

__all__ = [
    'bedratyuk_h', 'bedratyuk_invariant_dim', 'bedratyuk_table', 'binary_invariant_dim',
    'cayley_sylvester_polynomial', 'covariant_multiplicities', 'hermite_reciprocity',
    'howe_dimension', 'howe_series', 'partition_count_series', 'ternary_weight_enumerator',
    'weight_space_dims',
    'covariant_table', 'gamma_series', 'phi_j', 'springer_bigraded', 'springer_covariant_series',
]
