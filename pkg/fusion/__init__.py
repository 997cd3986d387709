"""
Discrete RCFT fusion rings
"""

from .ring import (
    FusionData,
    FusionError,
    FusionMatrices,
    FusionRing,
    build_fusion_data,
    check_braiding,
    check_cyclic,
    check_dual_pairing,
    check_fusion_algebra,
    check_precompact,
    check_proassociativity,
    check_unit_self_dual,
    format_fusion,
    fusion_matrices,
    is_closed,
    validate_fusion,
)
from .generators import gen_fibonacci, gen_group_fusion, gen_ising

__all__ = [
    'FusionData',
    'FusionError',
    'FusionMatrices',
    'FusionRing',
    'build_fusion_data',
    'check_braiding',
    'check_cyclic',
    'check_dual_pairing',
    'check_fusion_algebra',
    'check_precompact',
    'check_proassociativity',
    'check_unit_self_dual',
    'format_fusion',
    'fusion_matrices',
    'gen_fibonacci',
    'gen_group_fusion',
    'gen_ising',
    'is_closed',
    'validate_fusion',
]
