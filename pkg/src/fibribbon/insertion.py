"""Ribbon insertion ``p -> (P, Q)`` over Z(k) and its inverse."""

from __future__ import annotations

from typing import NamedTuple

from .errors import InsertionError
from .permutation import ColoredPermutation
from .tableau import Double, Single, Tableau, shape_word


class Pair(NamedTuple):
    P: Tableau
    Q: Tableau


class Ejected(NamedTuple):
    P: Tableau
    Q: Tableau
    value: int
    color: int


def insert_step(P: Tableau, Q: Tableau, value: int, color: int, step: int) -> Pair:
    """Insert the ribbon ``value`` of height ``color`` into ``P`` and record ``step`` in ``Q``.

    The incoming ribbon either opens a new column in front of the first
    column whose bottom label is smaller, or stacks on the current column,
    bumping that column's old top (height preserved) into the next column.
    """
    k = P.k
    if Q.k != k:
        raise InsertionError(f"P is over k={k} but Q is over k={Q.k}")
    if not 1 <= color <= k:
        raise InsertionError(f"color {color} outside 1..{k}")
    if value in P.labels():
        raise InsertionError(f"value {value} is already in P")
    if shape_word(P) != shape_word(Q):
        raise InsertionError("P and Q have different shapes")

    pcols = list(P.columns)
    qcols = list(Q.columns)
    pos = 0
    while True:
        if pos == len(pcols) or value > pcols[pos].bottom_label:
            pcols.insert(pos, Single(color, value))
            qcols.insert(pos, Single(color, step))
            break
        target = pcols[pos]
        pcols[pos] = Double(color, value, target.bottom_label)
        if isinstance(target, Single):
            g = qcols[pos].height
            qcols[pos] = Double(k + 1 - g, step, qcols[pos].label)
            break
        value, color = target.top_label, target.top_height
        pos += 1
    return Pair(Tableau(k, tuple(pcols)), Tableau(k, tuple(qcols)))


def insert(p: ColoredPermutation) -> Pair:
    P = Q = Tableau(p.k)
    for step, (value, color) in enumerate(p.entries, 1):
        P, Q = insert_step(P, Q, value, color, step)
    return Pair(P, Q)


def uninsert_step(P: Tableau, Q: Tableau) -> Ejected:
    """Undo the most recent :func:`insert_step`, identified by the largest label of ``Q``."""
    k = P.k
    if not P.columns or not Q.columns:
        raise InsertionError("nothing to uninsert from an empty pair")
    if Q.k != k or shape_word(P) != shape_word(Q):
        raise InsertionError("P and Q have different shapes")
    pcols = list(P.columns)
    qcols = list(Q.columns)
    pos, top = Q.locate(max(Q.labels()))

    qcol = qcols[pos]
    pcol = pcols[pos]
    if top:
        # The newest ribbon was stacked onto a Single; its old height lives in Q.
        g = qcol.bottom_height(k)
        qcols[pos] = Single(g, qcol.bottom_label)
        carry = (pcol.top_label, pcol.top_height)
        pcols[pos] = Single(g, pcol.bottom_label)
    else:
        if isinstance(qcol, Double):
            raise InsertionError(f"newest Q ribbon sits under a top ribbon in column {pos + 1}")
        if not isinstance(pcol, Single):
            raise InsertionError(f"P has a Double where Q has a new Single (column {pos + 1})")
        del qcols[pos]
        del pcols[pos]
        carry = (pcol.label, pcol.height)

    for c in range(pos - 1, -1, -1):
        col = pcols[c]
        if not isinstance(col, Double):
            raise InsertionError(f"cannot bump left through single column {c + 1}")
        if carry[0] > col.bottom_label:
            raise InsertionError(f"label {carry[0]} cannot sit on bottom {col.bottom_label} in column {c + 1}")
        pcols[c] = Double(carry[1], carry[0], col.bottom_label)
        carry = (col.top_label, col.top_height)
    return Ejected(Tableau(k, tuple(pcols)), Tableau(k, tuple(qcols)), carry[0], carry[1])


def uninsert(P: Tableau, Q: Tableau) -> ColoredPermutation:
    n = P.n
    if Q.n != n:
        raise InsertionError(f"P has {n} ribbons but Q has {Q.n}")
    entries = []
    for step in range(n, 0, -1):
        try:
            P, Q, value, color = uninsert_step(P, Q)
        except InsertionError as exc:
            raise InsertionError(f"step {step}: {exc}") from None
        entries.append((value, color))
    return ColoredPermutation(P.k, tuple(reversed(entries)))
