"""Equivariant Schubert calculus on nil-Hecke rings of finite root data."""

from .errors import (CapExceededError, InvalidTypeError, InvariantViolation, NilHeckeError,
                     NotDivisibleError, NotReducedError, RingMismatchError, UnsupportedError)
from .rootdata import RootDatum, parse_type, root_datum
from .weyl import GroupTable, WeylElement, generate, group_order
from .polyops import Poly

__version__ = "0.1.0"

__all__ = [
    "RootDatum", "root_datum", "parse_type", "GroupTable", "WeylElement", "generate",
    "group_order", "Poly", "NilHeckeError", "InvalidTypeError", "InvariantViolation",
    "NotDivisibleError", "NotReducedError", "RingMismatchError", "UnsupportedError",
    "CapExceededError",
]
