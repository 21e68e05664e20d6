"""Evacuation: standard tableaux to path tableaux, and back."""

from __future__ import annotations

from typing import NamedTuple

from .errors import InvalidTableau
from .tableau import Column, Double, Single, Tableau, _grow, _locate, is_path, is_standard, shape_word


class Vacated(NamedTuple):
    """Where the last empty ribbon of one evacuation pass ended up.

    ``column`` is 0-based in the tableau the pass started from.  ``top`` is
    True when the empty ribbon is the top of a Double (of height ``height``)
    and False when it is a whole Single column (removed afterwards).
    """

    column: int
    top: bool
    height: int


class Iteration(NamedTuple):
    rest: Tableau
    vacated: Vacated


def evacuate_iteration(P: Tableau) -> Iteration:
    if not P.columns:
        raise InvalidTableau("cannot evacuate an empty tableau")
    if not is_standard(P):
        raise InvalidTableau(f"not a standard tableau: {P}")
    k = P.k
    cols: list[Column] = list(P.columns)
    c = 0
    # cols[c] has an empty bottom ribbon from here on
    while True:
        col = cols[c]
        if isinstance(col, Single):
            del cols[c]
            return Iteration(Tableau(k, tuple(cols)), Vacated(c, False, col.height))
        a, h_a = col.top_label, col.top_height
        if c + 1 == len(cols) or a > cols[c + 1].bottom_label:
            cols[c] = Single(h_a, a)
            return Iteration(Tableau(k, tuple(cols)), Vacated(c, True, k + 1 - h_a))
        cols[c] = Double(h_a, a, cols[c + 1].bottom_label)
        c += 1


def evacuate(P: Tableau) -> Tableau:
    """The path tableau ``ev(P)``; label ``n`` goes where the first pass ends, ``n - 1`` the second, ..."""
    k = P.k
    shapes = [shape_word(P)]
    current = P
    while current.columns:
        current, _ = evacuate_iteration(current)
        shapes.append(shape_word(current))
    # Each pass is a down-cover, so reading the shapes backwards is a chain.
    cols: list[Column] = []
    chain = shapes[::-1]
    for i in range(1, len(chain)):
        _grow(cols, chain[i - 1], chain[i], i, i)
    return Tableau(k, tuple(cols))


def unevacuate(T: Tableau) -> Tableau:
    if not is_path(T):
        raise InvalidTableau(f"not a path tableau: {T}")
    k = T.k
    width = len(T.columns)
    cols: list[Column] = list(T.columns)
    # built[c] = [top (label, height) or None, bottom (label, height) or None]
    built: list[list] = [[None, None] for _ in range(width)]
    for i in range(1, T.n + 1):
        c, top = _locate(cols, 1)
        col = cols[c]
        if isinstance(col, Single):
            if c != len(cols) - 1:
                raise InvalidTableau(f"emptied column {c + 1} is not the last column")
            del cols[c]
            built[c][1] = (i, col.height)
            cols = [_dec(x) for x in cols]
            continue
        if top:
            survivor = Single(k + 1 - col.top_height, col.bottom_label)
        else:
            survivor = Single(col.top_height, col.top_label)
        cols[c] = survivor
        built[c][0] = (i, k + 1 - survivor.height)
        cols = [_dec(x) for x in cols]
        cols[c:] = _cycle(cols[c:])
    out: list[Column] = []
    for c, (top, bottom) in enumerate(built):
        if top is None:
            out.append(Single(bottom[1], bottom[0]))
        else:
            out.append(Double(top[1], top[0], bottom[0]))
    return Tableau(k, tuple(out))


def _dec(col: Column) -> Column:
    if isinstance(col, Single):
        return Single(col.height, col.label - 1)
    return Double(col.top_height, col.top_label - 1, col.bottom_label - 1)


def _cycle(cols: list[Column]) -> list[Column]:
    """Smallest label becomes the largest; every other label steps down to the next smaller one."""
    labels = sorted(label for col in cols for label in col.labels())
    if len(labels) < 2:
        return cols
    step = dict(zip(labels[1:], labels[:-1]))
    step[labels[0]] = labels[-1]
    out = []
    for col in cols:
        if isinstance(col, Single):
            out.append(Single(col.height, step[col.label]))
        else:
            out.append(Double(col.top_height, step[col.top_label], step[col.bottom_label]))
    return out
