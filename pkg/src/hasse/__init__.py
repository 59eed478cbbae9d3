"""Exact arithmetic for real quadratic units, ring class fields and the
cubic fields generated by cube roots of units."""

from .arith import Factorization, factorize, is_prime, is_squarefree, kronecker, sqrt_mod
from .quad import CfExpansion, FundUnit, QuadElem, c_of, fundamental_unit, half_residue
from .quad import is_cube_in_order, odd_part, qconj, qmul, qnorm, qpow, rational_prime_content

__all__ = [
    "Factorization",
    "factorize",
    "is_prime",
    "is_squarefree",
    "kronecker",
    "sqrt_mod",
    "QuadElem",
    "FundUnit",
    "CfExpansion",
    "fundamental_unit",
    "half_residue",
    "is_cube_in_order",
    "rational_prime_content",
    "c_of",
    "odd_part",
    "qmul",
    "qconj",
    "qnorm",
    "qpow",
]
