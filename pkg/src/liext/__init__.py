"""Exact computations with Lie algebra extending structures.

Scalars live in the rationals or a prime field (:mod:`liext.field`); Lie
algebras are structure-constant tensors (:mod:`liext.lie`); extending data,
unified products and their special cases are in :mod:`liext.extending`;
codimension-one extensions in :mod:`liext.twder`; brute-force checks over
small prime fields in :mod:`liext.oracle`.
"""

from .extending import (
    CrossedSystem,
    ExtendingDatum,
    ExtendingError,
    bicrossed_product,
    check_complex_product_structure,
    check_extending_structure,
    check_morphism,
    crossed_product,
    datum_cohomologous,
    datum_equivalent,
    extract_crossed_system,
    extract_datum,
    make_datum,
    transform_datum,
    twisted_product,
    unified_product,
)
from .field import GF, QQ, FieldError, FieldSpec
from .lie import (
    LieAlgebra,
    LieError,
    catalog,
    check_lie,
    derivations,
    inner_derivations,
    is_lie,
    is_perfect,
    make_lie_algebra,
    outer_dimension,
)
from .linalg import SubspaceBasis, nullspace, rank, rref, solve_affine
from .oracle import Census, SearchSpec, enumerate_extending_structures, orbit_census
from .report import AxiomCheck, AxiomReport
from .twder import (
    TwistedDerivation,
    check_twisted_derivation,
    classify_codim1,
    codim1_product,
    dspace_for_lambda,
    flag_extend,
    inner_twisted_derivation,
    lambda_space,
    twder_cohomologous,
    twder_equivalent,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomCheck",
    "AxiomReport",
    "bicrossed_product",
    "catalog",
    "Census",
    "check_complex_product_structure",
    "check_extending_structure",
    "check_lie",
    "check_morphism",
    "check_twisted_derivation",
    "classify_codim1",
    "codim1_product",
    "crossed_product",
    "CrossedSystem",
    "datum_cohomologous",
    "datum_equivalent",
    "derivations",
    "dspace_for_lambda",
    "enumerate_extending_structures",
    "ExtendingDatum",
    "ExtendingError",
    "extract_crossed_system",
    "extract_datum",
    "FieldError",
    "FieldSpec",
    "flag_extend",
    "GF",
    "inner_derivations",
    "inner_twisted_derivation",
    "is_lie",
    "is_perfect",
    "lambda_space",
    "LieAlgebra",
    "LieError",
    "make_datum",
    "make_lie_algebra",
    "nullspace",
    "orbit_census",
    "outer_dimension",
    "QQ",
    "rank",
    "rref",
    "SearchSpec",
    "solve_affine",
    "SubspaceBasis",
    "transform_datum",
    "twder_cohomologous",
    "twder_equivalent",
    "twisted_product",
    "TwistedDerivation",
    "unified_product",
]
