"""
Association schemes
Partitions of X x X, their intersection numbers and structural checks
"""

from .tensor import (
    IntersectionTensor,
    check_commutative,
    check_compact,
    check_compact_weighted,
    check_precompact,
    check_proassociativity,
    check_prounit_laws,
    check_valency_identity,
    mutate_tensor,
    permute_labels,
)
from .association import (
    AssociationScheme,
    ClassMatrix,
    SchemeError,
    bose_mesner_closure,
    canonicalize,
    format_scheme,
    intersection_numbers,
    prounit,
    relabel,
    validate,
)
from .generators import GenerationError, gen_cyclic, gen_group, gen_hamming, gen_johnson

__all__ = [
    'AssociationScheme',
    'ClassMatrix',
    'GenerationError',
    'IntersectionTensor',
    'SchemeError',
    'bose_mesner_closure',
    'canonicalize',
    'check_commutative',
    'check_compact',
    'check_compact_weighted',
    'check_precompact',
    'check_proassociativity',
    'check_prounit_laws',
    'check_valency_identity',
    'format_scheme',
    'gen_cyclic',
    'gen_group',
    'gen_hamming',
    'gen_johnson',
    'intersection_numbers',
    'mutate_tensor',
    'permute_labels',
    'prounit',
    'relabel',
    'validate',
]
