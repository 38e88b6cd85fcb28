"""
Kinvar 타블로 모듈

영 타블로 열거, 브래킷 다항식과 직선화, 기호 표현, 슈어 분해를 제공합니다.
"""

from .young import (
    Tableau,
    YoungDiagram,
    parse_tableau,
    semistandard_tableaux,
    standard_tableaux_count,
)
from .brackets import (
    BracketExpression,
    parse_bracket_expression,
    pluecker_straighten,
    symbolic_invariant,
    tableau_multilinear,
    tableau_to_bracket,
)
from .schur import (
    plethysm_character,
    schur_decompose,
    schur_dimension,
    schur_polynomial,
    sl_decompose,
    sl_partition,
)

__all__ = [
    'Tableau', 'YoungDiagram', 'parse_tableau', 'semistandard_tableaux', 'standard_tableaux_count',
    'BracketExpression', 'parse_bracket_expression', 'pluecker_straighten', 'symbolic_invariant',
    'tableau_multilinear', 'tableau_to_bracket',
    'plethysm_character', 'schur_decompose', 'schur_dimension', 'schur_polynomial',
    'sl_decompose', 'sl_partition',
]
