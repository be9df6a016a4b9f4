"""Exact coefficient arithmetic: Q(i), Laurent polynomials, rational functions."""

from .gaussian import GaussianRational
from .laurent import LaurentScalar, laurent_gcd
from .scalar import PQ, T, Scalar, format_laurent, pq_factorial, pq_number
from .specialize import (
    Numeric,
    OneParam,
    Quotient,
    Residue,
    Specialization,
    SpecializationError,
    cyclotomic,
    specialize,
)

__all__ = [
    "GaussianRational",
    "LaurentScalar",
    "Numeric",
    "OneParam",
    "PQ",
    "Quotient",
    "Residue",
    "Scalar",
    "Specialization",
    "SpecializationError",
    "T",
    "cyclotomic",
    "format_laurent",
    "laurent_gcd",
    "pq_factorial",
    "pq_number",
    "specialize",
]
