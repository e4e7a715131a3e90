"""Subset-indexed algebra modulo squared variables."""

from .masks import (
    SubsetMask,
    check_capacity,
    full_mask,
    mask_of,
    popcount,
    positions_of,
    submasks,
)
from .poly import (
    TruncatedPoly,
    coefficient,
    embed_variables,
    mul_affine,
    multiply_monomial,
    poly_from_array,
    poly_from_terms,
    poly_mul,
    poly_one,
    poly_zero,
    restrict_and_divide,
    select_variables,
)

__all__ = [
    'SubsetMask', 'check_capacity', 'full_mask', 'mask_of', 'popcount',
    'positions_of', 'submasks', 'TruncatedPoly', 'coefficient',
    'embed_variables', 'mul_affine', 'multiply_monomial', 'poly_from_array',
    'poly_from_terms', 'poly_mul', 'poly_one', 'poly_zero',
    'restrict_and_divide', 'select_variables',
]
