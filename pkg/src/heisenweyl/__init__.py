"""Exact computation in the two-parameter quantum Heisenberg algebra."""

from .hpq import HeisenbergAlgebra, PBWElement, commutator, quommutator, theta
from .localize import LocalElement, LocalizedHeisenberg, virasoro_L
from .params import Numeric, OneParam, Quotient, Scalar, SpecializationError, pq_number
from .report import Entry, VerificationReport
from .suites import SuiteConfig, run_suite

__all__ = [
    "Entry",
    "HeisenbergAlgebra",
    "LocalElement",
    "LocalizedHeisenberg",
    "Numeric",
    "OneParam",
    "PBWElement",
    "Quotient",
    "Scalar",
    "SpecializationError",
    "SuiteConfig",
    "VerificationReport",
    "commutator",
    "pq_number",
    "quommutator",
    "run_suite",
    "theta",
    "virasoro_L",
]
