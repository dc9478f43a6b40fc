"""Exact arithmetic layer: rationals, quadratic fields, polynomials, matrices."""

from fractions import Fraction as Rational

from .matrix import (
    FieldSymMatrix,
    PsdCertificate,
    char_poly,
    char_poly_batch,
    field_nullspace,
    field_rank,
    field_solve,
    psd_status,
    quadratic_form,
    solve_symmetric,
)
from .numberfield import AlgebraicElement, AlgebraicField
from .poly import (
    IntPoly,
    LargestRoot,
    NoRealRoot,
    RealAlgebraic,
    count_roots,
    isolate_real_roots,
    largest_root,
    root_multiplicity,
    squarefree_part,
    sturm_chain,
    yun_decomposition,
)
from .quadratic import QuadraticNumber, field_sign, sqrt_rational

__all__ = [
    "Rational",
    "QuadraticNumber",
    "field_sign",
    "sqrt_rational",
    "IntPoly",
    "LargestRoot",
    "NoRealRoot",
    "RealAlgebraic",
    "AlgebraicField",
    "AlgebraicElement",
    "count_roots",
    "isolate_real_roots",
    "largest_root",
    "root_multiplicity",
    "squarefree_part",
    "sturm_chain",
    "yun_decomposition",
    "FieldSymMatrix",
    "PsdCertificate",
    "char_poly",
    "char_poly_batch",
    "field_nullspace",
    "field_rank",
    "field_solve",
    "psd_status",
    "quadratic_form",
    "solve_symmetric",
]
