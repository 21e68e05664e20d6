"""Ribbon statistics and the color-to-spin check."""

from __future__ import annotations

from fractions import Fraction

from .errors import FibError
from .insertion import insert
from .permutation import color, enumerate_all
from .tableau import Double, Single, Tableau, shape_word


def vert(t: Tableau) -> int:
    """Sum of (height - 1) over every ribbon; depends only on the shape."""
    total = 0
    for col in t.columns:
        if isinstance(col, Single):
            total += col.height - 1
        else:
            total += t.k - 1
    return total


def vert_pair(P: Tableau, Q: Tableau) -> int:
    return vert(P) + vert(Q)


def split(t: Tableau) -> int:
    return sum(t.k - col.top_height for col in t.columns if isinstance(col, Double))


def spin(P: Tableau, Q: Tableau) -> int:
    if shape_word(P) != shape_word(Q):
        raise FibError("spin needs P and Q of the same shape")
    return vert(P) + split(Q) - split(P)


def spin_half_form(P: Tableau, Q: Tableau) -> Fraction:
    """``vert(P, Q) / 2 + split(Q) - split(P)`` evaluated with exact rationals."""
    return Fraction(vert_pair(P, Q), 2) + split(Q) - split(P)


def check_color_to_spin(n: int, k: int) -> bool:
    for p in enumerate_all(n, k):
        P, Q = insert(p)
        if color(p) != spin(P, Q):
            return False
    return True
