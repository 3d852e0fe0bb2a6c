"""
Exact Algebra Module
Rational polynomials, matrices and spectral data without rounding
"""

from .polynomial import RationalPolynomial, cyclotomic, euler_phi, divisors
from .matrix import (
    RationalMatrix,
    parse_rational,
    format_rational,
    span_basis,
    rank_of_rows,
)
from .spectral import (
    QUASI_UNIPOTENCY_BOUND,
    JordanBlock,
    char_poly,
    cyclotomic_factorization,
    quasi_unipotency_order,
    jordan_structure,
    unipotent_part_multiplicity,
    is_unipotent,
)


def matrix_rank(matrix: RationalMatrix) -> int:
    """Rank over the rationals by exact elimination"""
    return matrix.rank()


__all__ = [
    'RationalPolynomial',
    'RationalMatrix',
    'JordanBlock',
    'QUASI_UNIPOTENCY_BOUND',
    'cyclotomic',
    'euler_phi',
    'divisors',
    'parse_rational',
    'format_rational',
    'span_basis',
    'rank_of_rows',
    'matrix_rank',
    'char_poly',
    'cyclotomic_factorization',
    'quasi_unipotency_order',
    'jordan_structure',
    'unipotent_part_multiplicity',
    'is_unipotent',
]
