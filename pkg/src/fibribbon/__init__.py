"""Ribbon insertion, growth diagrams and evacuation over the Fibonacci differential poset Z(k)."""

from .errors import (
    EnumerationTooLarge,
    FibError,
    IncompatibleAlphabet,
    InsertionError,
    InvalidTableau,
    NotACover,
    ParseError,
)
from .fibword import FibWord, format_word, parse_word
from .insertion import insert, uninsert
from .permutation import ColoredPermutation, format_permutation, parse_permutation
from .tableau import Double, Single, Tableau

__version__ = "0.1.0"

__all__ = [
    "ColoredPermutation",
    "Double",
    "EnumerationTooLarge",
    "FibError",
    "FibWord",
    "IncompatibleAlphabet",
    "InsertionError",
    "InvalidTableau",
    "NotACover",
    "ParseError",
    "Single",
    "Tableau",
    "format_permutation",
    "format_word",
    "insert",
    "parse_permutation",
    "parse_word",
    "uninsert",
]
