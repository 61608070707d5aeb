from .ffield import GF, FFElem, build_extension_field, is_prime
from .mpoly import MPoly
from .poly import UniPoly, exact_quo
from .resultant import (
    discriminant,
    exact_divide,
    rational_roots,
    resultant,
    square_root_rational,
)
from .textform_parse import ParseError, parse_polynomial, parse_rational_function

__all__ = [
    "GF", "FFElem", "build_extension_field", "is_prime", "MPoly", "UniPoly",
    "exact_quo", "discriminant", "exact_divide", "rational_roots", "resultant",
    "square_root_rational", "ParseError", "parse_polynomial", "parse_rational_function",
]
