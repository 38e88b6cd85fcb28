"""
Kinvar 형식 모듈

이진/삼진 형식의 불변식과 공변식 계산 기능을 제공합니다.
"""

from .binary_form import (
    BinaryForm,
    apply_D,
    apply_Delta,
    invariant_basis,
    isobaric_monomials,
    power_form,
    reynolds,
)
from .transvectant import (
    apolarity_pairing,
    catalecticant,
    cubic_covariant_suite,
    gherardelli_determinant,
    hessian,
    quartic_invariants,
    transvectant,
)
from .ternary_form import (
    TernaryForm,
    apply_D1,
    apply_D2,
    clebsch_catalecticant,
    cubic_invariant_A,
    polarize,
    power_form_ternary,
    restrict_to_line,
    ternary_invariant_basis,
    ternary_isobaric_monomials,
    trilinear_A,
)
from .aronhold import aronhold_invariant, aronhold_matrix, aronhold_pfaffian, polar_cubic, scorza_quartic

__all__ = [
    'BinaryForm', 'apply_D', 'apply_Delta', 'invariant_basis', 'isobaric_monomials',
    'power_form', 'reynolds',
    'apolarity_pairing', 'catalecticant', 'cubic_covariant_suite', 'gherardelli_determinant',
    'hessian', 'quartic_invariants', 'transvectant',
    'TernaryForm', 'apply_D1', 'apply_D2', 'clebsch_catalecticant', 'cubic_invariant_A',
    'polarize', 'power_form_ternary', 'restrict_to_line', 'ternary_invariant_basis',
    'ternary_isobaric_monomials', 'trilinear_A',
    'aronhold_invariant', 'aronhold_matrix', 'aronhold_pfaffian', 'polar_cubic', 'scorza_quartic',
]
