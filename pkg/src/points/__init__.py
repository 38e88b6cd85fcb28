"""
Kinvar 점 구성 모듈

직선 위 점들의 그래프 대수(켐프 기저, 직선화, 주베르 불변식)와
평면 위 여섯 점의 크레모나 6면체 방정식을 제공합니다.
"""

from .line_graphs import (
    GraphCombination,
    HallResult,
    MatchGraph,
    edges_cross,
    graph_evaluate,
    graph_straighten,
    hall_perfect_matching,
    noncrossing_matchings,
    random_regular_bipartite,
)
from .six_points_line import (
    CobleReport,
    JoubertResult,
    b15,
    coble_ring_checks,
    cross_ratio,
    joubert_invariants,
    joubert_permutation_action,
    joubert_values_table,
    segre_relation_polynomial,
    t_coordinates,
    t_graph,
)
from .six_points_plane import (
    CremonaResult,
    HexahedralReport,
    PlaneConfig,
    PlaneReport,
    bracket3,
    conic_invariant_d2,
    conic_through_five,
    cremona_action,
    cremona_cubics,
    hexahedral_line_check,
    lagrange_bracket,
    line_form,
    morley_covariant,
    overline_identity_check,
    pair_partitions,
    six_plane_checks,
    verify_plane_configuration,
)

__all__ = [
    'GraphCombination', 'HallResult', 'MatchGraph', 'edges_cross', 'graph_evaluate',
    'graph_straighten', 'hall_perfect_matching', 'noncrossing_matchings', 'random_regular_bipartite',
    'CobleReport', 'JoubertResult', 'b15', 'coble_ring_checks', 'cross_ratio', 'joubert_invariants',
    'joubert_permutation_action', 'joubert_values_table', 'segre_relation_polynomial',
    't_coordinates', 't_graph',
    'CremonaResult', 'HexahedralReport', 'PlaneConfig', 'PlaneReport', 'bracket3',
    'conic_invariant_d2', 'conic_through_five', 'cremona_action', 'cremona_cubics',
    'hexahedral_line_check', 'lagrange_bracket', 'line_form', 'morley_covariant',
    'overline_identity_check', 'pair_partitions', 'six_plane_checks', 'verify_plane_configuration',
]
