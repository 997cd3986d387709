"""
Exact rational linear algebra
Carrier for morphisms of finite-dimensional vector spaces over Q
"""

from .matrix import (
    Mat,
    Scalar,
    ShapeError,
    SingularMatrixError,
    direct_sum,
    dual,
    hstack,
    inverse,
    is_iso,
    kron,
    mat_add,
    mat_mul,
    parse_rational,
    rank,
    scale,
    to_scalar,
    vstack,
)

__all__ = [
    'Mat',
    'Scalar',
    'ShapeError',
    'SingularMatrixError',
    'direct_sum',
    'dual',
    'hstack',
    'inverse',
    'is_iso',
    'kron',
    'mat_add',
    'mat_mul',
    'parse_rational',
    'rank',
    'scale',
    'to_scalar',
    'vstack',
]
