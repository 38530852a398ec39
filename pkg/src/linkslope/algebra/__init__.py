"""Exact arithmetic building blocks: Laurent polynomials, rational
functions, cyclotomic numbers and duck-typed linear algebra."""

from .cyclotomic import CyclotomicElement, cyclotomic_polynomial, root_of_unity
from .laurent import (
    LaurentPoly,
    RationalFunction,
    exact_divide,
    multivariate_gcd,
    parse_poly,
    parse_rational,
)
from .linalg import (
    bareiss_det,
    bareiss_rank,
    hermitian_signature,
    in_column_span,
    kernel_basis,
    matrix_rank,
    smith_invariants,
    solve_linear,
    solve_system,
)


def laurent_eval(p: LaurentPoly, point):
    """Exact value of p at a point of field elements (cyclotomic, rational,
    rational-function); negative exponents go through field inverses."""
    return p.evaluate(point)


__all__ = [
    "CyclotomicElement",
    "cyclotomic_polynomial",
    "root_of_unity",
    "LaurentPoly",
    "RationalFunction",
    "exact_divide",
    "laurent_eval",
    "multivariate_gcd",
    "parse_poly",
    "parse_rational",
    "bareiss_det",
    "bareiss_rank",
    "hermitian_signature",
    "in_column_span",
    "kernel_basis",
    "matrix_rank",
    "smith_invariants",
    "solve_linear",
    "solve_system",
]
