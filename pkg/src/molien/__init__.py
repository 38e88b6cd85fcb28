"""
Kinvar 몰리엔 모듈

대칭군 지표 데이터와 몰리엔 급수(불변식 환의 힐베르트 급수)를 제공합니다.
"""

from .groups import (
    ConjugacyClass,
    GroupData,
    RepresentationCharacter,
    SubgroupMode,
    available_groups,
    character_table_df,
    get_group,
    power_map_df,
    symmetric_group,
)
from .molien_series import (
    charpoly_from_power_traces,
    class_charpoly,
    det_one_minus,
    molien_multiplicity,
    molien_series,
    sym_power_character,
)

__all__ = [
    'ConjugacyClass', 'GroupData', 'RepresentationCharacter', 'SubgroupMode',
    'available_groups', 'character_table_df', 'get_group', 'power_map_df', 'symmetric_group',
    'charpoly_from_power_traces', 'class_charpoly', 'det_one_minus',
    'molien_multiplicity', 'molien_series', 'sym_power_character',
]
