"""Exact computation of dicritical divisors over 2-dimensional regular local rings.

The package models the local ring k[[x, y]] (restricted to polynomial data),
walks base point trees through quadratic transforms, and derives dicritical
divisors, Zariski factorizations, integral closures, reductions, and the
partition of a plane polynomial's dicriticals among its points at infinity.
"""

from .arith import (
    QQ,
    BiPoly,
    FieldTower,
    UniPoly,
    bipoly_gcd,
    factor_univariate,
    homogeneous_gcd,
    squarefree_part,
)
from .atinfinity import (
    InfinityPoint,
    InfinityReport,
    dicriticals_at_infinity,
    points_at_infinity,
)
from .divisors import (
    PrimeDivisor,
    RationalFn,
    ResidueImage,
    dicritical_degree,
    residue_image,
    simple_ideal,
)
from .errors import (
    BudgetExceeded,
    ConstantImage,
    DepthExceeded,
    DivisionNotTopLevel,
    EmptyInput,
    EngineError,
    NodeBudgetExceeded,
    NonzeroValue,
    NotIrreducible,
    ParseError,
    SquarefreeUnsupported,
    UnitIdeal,
    UnsupportedExtension,
    Unstable,
    ZeroInput,
    ZeroPolynomial,
)
from .idealcalc import (
    ReductionResult,
    TruncationFrame,
    abhyankar_family,
    closure_colength,
    closure_equals,
    closure_membership,
    colength,
    ideal_equals,
    is_reduction,
    membership,
    minimal_generators,
    power,
    product,
)
from .nearpoints import (
    LocalIdeal,
    QdtPath,
    QdtStep,
    pullback_order,
    transform_ideal,
    zariski_number,
)
from .zariski import (
    BasePointTree,
    DicriticalRecord,
    Factorization,
    SpecialPencilResult,
    TreeConfig,
    base_point_tree,
    dicritical_of_rational,
    dicritical_set,
    rees_certificate,
    special_pencil_test,
    zariski_factorization,
)

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "BiPoly",
    "FieldTower",
    "UniPoly",
    "bipoly_gcd",
    "factor_univariate",
    "homogeneous_gcd",
    "squarefree_part",
    "InfinityPoint",
    "InfinityReport",
    "dicriticals_at_infinity",
    "points_at_infinity",
    "PrimeDivisor",
    "RationalFn",
    "ResidueImage",
    "dicritical_degree",
    "residue_image",
    "simple_ideal",
    "BudgetExceeded",
    "ConstantImage",
    "DepthExceeded",
    "DivisionNotTopLevel",
    "EmptyInput",
    "EngineError",
    "NodeBudgetExceeded",
    "NonzeroValue",
    "NotIrreducible",
    "ParseError",
    "SquarefreeUnsupported",
    "UnitIdeal",
    "UnsupportedExtension",
    "Unstable",
    "ZeroInput",
    "ZeroPolynomial",
    "ReductionResult",
    "TruncationFrame",
    "abhyankar_family",
    "closure_colength",
    "closure_equals",
    "closure_membership",
    "colength",
    "ideal_equals",
    "is_reduction",
    "membership",
    "minimal_generators",
    "power",
    "product",
    "LocalIdeal",
    "QdtPath",
    "QdtStep",
    "pullback_order",
    "transform_ideal",
    "zariski_number",
    "BasePointTree",
    "DicriticalRecord",
    "Factorization",
    "SpecialPencilResult",
    "TreeConfig",
    "base_point_tree",
    "dicritical_of_rational",
    "dicritical_set",
    "rees_certificate",
    "special_pencil_test",
    "zariski_factorization",
]
