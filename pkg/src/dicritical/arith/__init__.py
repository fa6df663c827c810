from .fields import QQ, FieldTower
from .polynomials import BiPoly, UniPoly, bipoly_gcd, homogeneous_gcd, squarefree_part
from .factor import (
    extend,
    factor_univariate,
    is_irreducible,
    roots_in_field,
    squarefree_decomposition,
)
from .linalg import SparseEchelon, kernel_basis, rank_of

__all__ = [
    "QQ",
    "FieldTower",
    "UniPoly",
    "BiPoly",
    "bipoly_gcd",
    "homogeneous_gcd",
    "squarefree_part",
    "factor_univariate",
    "squarefree_decomposition",
    "is_irreducible",
    "roots_in_field",
    "extend",
    "SparseEchelon",
    "kernel_basis",
    "rank_of",
]
