"""Free-algebra terms, an expression parser, and quadratic rewriting."""

from .parser import ParseError, UnknownGeneratorError, parse_expression, parse_scalar
from .rewriting import (
    HPQ_ALPHABET,
    Overlap,
    RewriteRule,
    RewriteSystem,
    check_overlaps,
    hpq_rules,
    normalize,
)
from .words import Alphabet, FreeElement, Letter, format_terms, format_word

__all__ = [
    "Alphabet",
    "FreeElement",
    "HPQ_ALPHABET",
    "Letter",
    "Overlap",
    "ParseError",
    "RewriteRule",
    "RewriteSystem",
    "UnknownGeneratorError",
    "check_overlaps",
    "format_terms",
    "format_word",
    "hpq_rules",
    "normalize",
    "parse_expression",
    "parse_scalar",
]
