"""Exact arithmetic in Hahn series fields over the real algebraic numbers.

The field K consists of fractions of finite generalized polynomials in
positive infinitesimals t1..tn with rational-vector exponents and real
algebraic coefficients. Everything is computed exactly: ordering,
valuations, truncated expansions, floors in the canonical integer part,
value-group and residue-field sections, bounded sign-condition types, and
a small family of order-automorphisms.
"""

from .errors import HahnfieldError
from .grammar import format_elem, parse_expr
from .hahn import HahnElem, decompose, expand, nth_root_trunc, sturm_count
from .integer_part import floor, floor_via_dense, is_member
from .realalg import RealAlgNum, sqrt

__all__ = [
    "HahnElem",
    "HahnfieldError",
    "RealAlgNum",
    "decompose",
    "expand",
    "floor",
    "floor_via_dense",
    "format_elem",
    "is_member",
    "nth_root_trunc",
    "parse_expr",
    "sqrt",
    "sturm_count",
]

__version__ = "0.1.0"
