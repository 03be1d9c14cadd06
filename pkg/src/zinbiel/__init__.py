"""Exact computations with finite-dimensional Zinbiel algebras."""

from .algebra import (Algebra, NotSupportedError, NotZinbielError, Subspace, center,
                      check_zinbiel, derived_series, is_abelian, is_ideal, is_subalgebra,
                      is_supersolvable, lower_central_series, product, quotient,
                      subspace_from_vectors, subspace_product)
from .field import QQ, PrimeField, QuadraticExtension

__version__ = "0.1.0"

__all__ = [
    "Algebra", "NotSupportedError", "NotZinbielError", "PrimeField", "QQ", "QuadraticExtension",
    "Subspace", "center", "check_zinbiel", "derived_series", "is_abelian", "is_ideal",
    "is_subalgebra", "is_supersolvable", "lower_central_series", "product", "quotient",
    "subspace_from_vectors", "subspace_product",
]
