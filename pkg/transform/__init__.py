"""
The graphic Fourier transform over discrete kernels
"""

from .objects import Cell, DimObject, MatMorphismFamily, MatObject, MorphismFamily
from .kernels import (
    DiscreteKernel,
    FusionKernel,
    Kernel,
    KernelError,
    SchemeKernel,
    cayley_kcheck,
    cayley_khat,
    convolve,
    convolve_morphism,
    counit_eps,
    kcheck,
    kcheck_morphism,
    khat,
    khat_morphism,
    mat_compose,
    star_source,
    star_source_morphism,
    star_target,
    star_target_morphism,
    unit_eta,
    unit_left_inverse,
)
from .checks import (
    RegularityTester,
    ScalarRegularity,
    WienerResult,
    check_compose_associative,
    check_conservative,
    check_conservative_random,
    check_multiplicative,
    check_regular_closure,
    check_round_trip,
    check_star_preserved,
    check_star_preserved_morphism,
    check_triangles,
    check_unit_preserved,
    check_unit_split_mono,
    check_wiener_round_trip,
    dim_object_pairs,
    dual_comparison,
    dual_comparison_maps,
    enumerate_dim_objects,
    is_class_constant,
    is_regular,
    random_dim_object,
    random_mat_object,
    random_morphism,
    reflects_iso,
    regularity_characterization,
    scalar_family,
    wiener_membership,
)

__all__ = [
    'Cell',
    'DimObject',
    'DiscreteKernel',
    'FusionKernel',
    'Kernel',
    'KernelError',
    'MatMorphismFamily',
    'MatObject',
    'MorphismFamily',
    'RegularityTester',
    'ScalarRegularity',
    'SchemeKernel',
    'WienerResult',
    'cayley_kcheck',
    'cayley_khat',
    'check_compose_associative',
    'check_conservative',
    'check_conservative_random',
    'check_multiplicative',
    'check_regular_closure',
    'check_round_trip',
    'check_star_preserved',
    'check_star_preserved_morphism',
    'check_triangles',
    'check_unit_preserved',
    'check_unit_split_mono',
    'check_wiener_round_trip',
    'convolve',
    'convolve_morphism',
    'counit_eps',
    'dim_object_pairs',
    'dual_comparison',
    'dual_comparison_maps',
    'enumerate_dim_objects',
    'is_class_constant',
    'is_regular',
    'kcheck',
    'kcheck_morphism',
    'khat',
    'khat_morphism',
    'mat_compose',
    'random_dim_object',
    'random_mat_object',
    'random_morphism',
    'reflects_iso',
    'regularity_characterization',
    'scalar_family',
    'star_source',
    'star_source_morphism',
    'star_target',
    'star_target_morphism',
    'unit_eta',
    'unit_left_inverse',
    'wiener_membership',
]
