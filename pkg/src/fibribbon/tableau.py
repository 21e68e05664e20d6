"""Ribbon tableaux over Z(k), modelled column by column.

A tableau is an ordered list of columns, leftmost first.  A column is either a
:class:`Single` ribbon of some height, or a :class:`Double`: a top ribbon of
height ``t`` stacked on a bottom ribbon whose height is forced to ``k + 1 - t``.
The same type carries both standard and path tableaux; :func:`is_standard` and
:func:`is_path` tell them apart.  Cells are derived from columns on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .errors import IncompatibleAlphabet, InvalidTableau, NotACover, ParseError
from .fibword import TWO, FibWord, covers_down, first_one, rank


@dataclass(frozen=True, slots=True)
class Single:
    height: int
    label: int

    @property
    def bottom_label(self) -> int:
        return self.label

    def labels(self) -> tuple[int, ...]:
        return (self.label,)


@dataclass(frozen=True, slots=True)
class Double:
    top_height: int
    top_label: int
    bottom_label: int

    def bottom_height(self, k: int) -> int:
        return k + 1 - self.top_height

    def labels(self) -> tuple[int, ...]:
        return (self.top_label, self.bottom_label)


Column = Union[Single, Double]


@dataclass(frozen=True, slots=True)
class Tableau:
    k: int
    columns: tuple[Column, ...] = ()

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        seen = set()
        for i, col in enumerate(self.columns):
            height = col.height if isinstance(col, Single) else col.top_height
            if not 1 <= height <= self.k:
                raise InvalidTableau(f"column {i + 1}: height {height} outside 1..{self.k}")
            for label in col.labels():
                if label in seen:
                    raise InvalidTableau(f"label {label} appears in more than one ribbon")
                seen.add(label)

    def __len__(self) -> int:
        return len(self.columns)

    def __str__(self) -> str:
        parts = []
        for col in self.columns:
            if isinstance(col, Single):
                parts.append(f"{col.label}:h{col.height}")
            else:
                parts.append(f"{col.top_label}/{col.bottom_label}:h{col.top_height}")
        return "[" + " | ".join(parts) + "]"

    @property
    def n(self) -> int:
        """Number of ribbons."""
        return sum(1 if isinstance(c, Single) else 2 for c in self.columns)

    def labels(self) -> list[int]:
        return [label for col in self.columns for label in col.labels()]

    def has_standard_labels(self) -> bool:
        return sorted(self.labels()) == list(range(1, self.n + 1))

    def locate(self, label: int) -> tuple[int, bool]:
        """Return ``(column index, is_top)`` of the ribbon carrying ``label``."""
        return _locate(self.columns, label)

    def relabel(self, f) -> Tableau:
        cols = []
        for col in self.columns:
            if isinstance(col, Single):
                cols.append(Single(col.height, f(col.label)))
            else:
                cols.append(Double(col.top_height, f(col.top_label), f(col.bottom_label)))
        return Tableau(self.k, tuple(cols))


def _locate(cols, label: int) -> tuple[int, bool]:
    for i, col in enumerate(cols):
        if isinstance(col, Double) and col.top_label == label:
            return i, True
        if col.bottom_label == label:
            return i, False
    raise KeyError(label)


def _shape(k: int, cols) -> FibWord:
    return FibWord(k, tuple(c.height if isinstance(c, Single) else TWO for c in cols))


def shape_word(t: Tableau) -> FibWord:
    return _shape(t.k, t.columns)


def _remove(cols: list[Column], i: int, top: bool, k: int) -> None:
    col = cols[i]
    if top:
        cols[i] = Single(k + 1 - col.top_height, col.bottom_label)
    else:
        del cols[i]


def is_standard(t: Tableau) -> bool:
    """Removing labels in increasing order only ever takes a Double's top or the last column."""
    cols = list(t.columns)
    for label in sorted(t.labels()):
        i, top = _locate(cols, label)
        if not top and (isinstance(cols[i], Double) or i != len(cols) - 1):
            return False
        _remove(cols, i, top, t.k)
    return True


def is_standard_by_order(t: Tableau) -> bool:
    """Bottom labels strictly decrease left to right and every top is below its bottom."""
    bottoms = [c.bottom_label for c in t.columns]
    if any(a <= b for a, b in zip(bottoms, bottoms[1:])):
        return False
    return all(c.top_label < c.bottom_label for c in t.columns if isinstance(c, Double))


def _path_removals(t: Tableau) -> list[FibWord] | None:
    """Shapes seen while peeling labels from largest to smallest, or None if some step is illegal."""
    cols = list(t.columns)
    shapes = [shape_word(t)]
    for label in sorted(t.labels(), reverse=True):
        i, top = _locate(cols, label)
        if not all(isinstance(c, Double) for c in cols[:i]):
            return None
        if not top and isinstance(cols[i], Double):
            return None
        _remove(cols, i, top, t.k)
        shapes.append(_shape(t.k, cols))
    return shapes


def is_path(t: Tableau) -> bool:
    """Every removal from the largest label down is a Z(k) down-cover at the column level."""
    return _path_removals(t) is not None


def path_to_chain(t: Tableau) -> list[FibWord]:
    shapes = _path_removals(t)
    if shapes is None:
        raise InvalidTableau(f"not a path tableau: {t}")
    return shapes[::-1]


def _grow(cols: list[Column], z: FibWord, w: FibWord, label: int, step: int) -> None:
    """Apply the column change for the cover ``z < w`` in place."""
    k = w.k
    if len(w) == len(z) + 1:
        p = first_one(w)
        if p is None or w.letters[:p] + w.letters[p + 1:] != z.letters:
            raise NotACover(f"{z} -> {w} is not an insertion of a 1 into the leading 2's", step)
        cols.insert(p, Single(w.letters[p], label))
    elif len(w) == len(z):
        p = first_one(z)
        if p is None or w.letters != z.letters[:p] + (TWO,) + z.letters[p + 1:]:
            raise NotACover(f"{z} -> {w} does not turn the leftmost 1 into a 2", step)
        cols[p] = Double(k + 1 - z.letters[p], label, cols[p].label)
    else:
        raise NotACover(f"{z} -> {w} is not a cover", step)


def chain_to_path(chain: Iterable[FibWord]) -> Tableau:
    chain = list(chain)
    if not chain:
        raise NotACover("empty chain", 0)
    k = chain[0].k
    if chain[0].letters:
        raise NotACover(f"chain must start at the empty word, got {chain[0]}", 0)
    cols: list[Column] = []
    for i in range(1, len(chain)):
        if chain[i].k != k:
            raise IncompatibleAlphabet(f"step {i}: word over k={chain[i].k}, chain is over k={k}")
        _grow(cols, chain[i - 1], chain[i], i, i)
    return Tableau(k, tuple(cols))


@lru_cache(maxsize=None)
def _paths(k: int, letters: tuple[int, ...]) -> tuple[tuple[Column, ...], ...]:
    if not letters:
        return ((),)
    w = FibWord(k, letters)
    label = rank(w)
    out = []
    for z in covers_down(w):
        for cols in _paths(k, z.letters):
            grown = list(cols)
            _grow(grown, z, w, label, label)
            out.append(tuple(grown))
    return tuple(out)


def enumerate_path(w: FibWord) -> list[Tableau]:
    return [Tableau(w.k, cols) for cols in _paths(w.k, w.letters)]


@lru_cache(maxsize=None)
def _standards(k: int, letters: tuple[int, ...]) -> tuple[tuple[Column, ...], ...]:
    # Label 1 is either the top of some Double or the last column when it is a Single.
    if not letters:
        return ((),)
    out = []
    for c, letter in enumerate(letters):
        if letter != TWO:
            continue
        for top in range(1, k + 1):
            rest = letters[:c] + (k + 1 - top,) + letters[c + 1:]
            for cols in _standards(k, rest):
                grown = [_shift(col) for col in cols]
                grown[c] = Double(top, 1, grown[c].label)
                out.append(tuple(grown))
    if letters[-1] != TWO:
        for cols in _standards(k, letters[:-1]):
            out.append(tuple(_shift(col) for col in cols) + (Single(letters[-1], 1),))
    return tuple(out)


def _shift(col: Column) -> Column:
    if isinstance(col, Single):
        return Single(col.height, col.label + 1)
    return Double(col.top_height, col.top_label + 1, col.bottom_label + 1)


def enumerate_standard(w: FibWord) -> list[Tableau]:
    return [Tableau(w.k, cols) for cols in _standards(w.k, w.letters)]


# -- cells ---------------------------------------------------------------


@dataclass(frozen=True)
class CellGrid:
    """Cells keyed by ``(x, y)``, 0-based with the origin at the bottom left.

    Each value is ``(label, ribbon_id)``; ribbon ids count left to right,
    bottom ribbon before top ribbon.
    """

    width: int
    height: int
    cells: dict[tuple[int, int], tuple[int | None, int]]


def column_width(col: Column, k: int) -> int:
    return 1 + k - col.height if isinstance(col, Single) else k


def cell_grid(t: Tableau) -> CellGrid:
    k = t.k
    cells: dict[tuple[int, int], tuple[int | None, int]] = {}
    x = 0
    rid = 0
    height = 0
    for col in t.columns:
        if isinstance(col, Single):
            h = col.height
            for y in range(h):
                cells[(x, y)] = (col.label, rid)
            for dx in range(1, k - h + 1):
                cells[(x + dx, 0)] = (col.label, rid)
            rid += 1
            height = max(height, h)
        else:
            top = col.top_height
            bottom, upper = rid, rid + 1
            for y in range(k + 1):
                owner = upper if y >= k + 1 - top else bottom
                cells[(x, y)] = (col.top_label if owner == upper else col.bottom_label, owner)
            for dx in range(1, k):
                owner = upper if dx >= top else bottom
                cells[(x + dx, 0)] = (col.top_label if owner == upper else col.bottom_label, owner)
            rid += 2
            height = k + 1
        x += column_width(col, k)
    return CellGrid(x, height, cells)


def shape_cells(w: FibWord) -> CellGrid:
    """Cells of a bare shape; labels are ``None`` and every Double is tiled with top height 1."""
    cols = []
    label = 0
    for letter in w.letters:
        if letter == TWO:
            cols.append(Double(1, label + 1, label + 2))
            label += 2
        else:
            cols.append(Single(letter, label + 1))
            label += 1
    grid = cell_grid(Tableau(w.k, tuple(cols)))
    return CellGrid(grid.width, grid.height, {xy: (None, r) for xy, (_, r) in grid.cells.items()})


def render_ascii(t: Tableau) -> str:
    """Boxed grid of labels; ``=`` and ``|`` separate ribbons, ``-`` and ``:`` sit inside one."""
    if not t.columns:
        return ""
    grid = cell_grid(t)
    cells = grid.cells
    width = max(len(str(label)) for label, _ in cells.values()) + 2

    def owner(x, y):
        c = cells.get((x, y))
        return None if c is None else c[1]

    def hedge(x, y):  # edge under cell row y
        a, b = owner(x, y - 1), owner(x, y)
        if a is None and b is None:
            return " "
        return "-" if a == b else "="

    def vedge(x, y):  # edge left of cell column x
        a, b = owner(x - 1, y), owner(x, y)
        if a is None and b is None:
            return " "
        return ":" if a == b else "|"

    lines = []
    for y in range(grid.height, -1, -1):
        row = []
        for x in range(grid.width + 1):
            around = (owner(x - 1, y - 1), owner(x, y - 1), owner(x - 1, y), owner(x, y))
            row.append("+" if any(o is not None for o in around) else " ")
            if x < grid.width:
                row.append(hedge(x, y) * width)
        lines.append("".join(row).rstrip())
        if y == 0:
            continue
        row = []
        for x in range(grid.width + 1):
            row.append(vedge(x, y - 1))
            if x < grid.width:
                c = cells.get((x, y - 1))
                row.append(str(c[0]).center(width) if c else " " * width)
        lines.append("".join(row).rstrip())
    return "\n".join(lines)


# -- serialization -------------------------------------------------------


def to_dict(t: Tableau) -> dict:
    cols = []
    for col in t.columns:
        if isinstance(col, Single):
            cols.append({"single": {"h": col.height, "label": col.label}})
        else:
            cols.append({"double": {"top_h": col.top_height, "top": col.top_label, "bottom": col.bottom_label}})
    return {"k": t.k, "columns": cols}


def from_dict(data: dict) -> Tableau:
    try:
        k = data["k"]
        cols = []
        for i, entry in enumerate(data["columns"]):
            if set(entry) == {"single"}:
                s = entry["single"]
                cols.append(Single(_int(s["h"]), _int(s["label"])))
            elif set(entry) == {"double"}:
                d = entry["double"]
                cols.append(Double(_int(d["top_h"]), _int(d["top"]), _int(d["bottom"])))
            else:
                raise ParseError(f"column must be exactly one of single/double, got {sorted(entry)}", i)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed tableau object: {exc!r}") from None
    if not isinstance(k, int) or isinstance(k, bool):
        raise ParseError("k must be an integer")
    t = Tableau(k, tuple(cols))
    if not t.has_standard_labels():
        raise InvalidTableau(f"labels must be exactly 1..{t.n}, got {sorted(t.labels())}")
    return t


def _int(v) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"expected an integer, got {v!r}")
    return v


def dumps(t: Tableau) -> str:
    return json.dumps(to_dict(t), separators=(",", ":"))


def loads(text: str) -> Tableau:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(data, dict):
        raise ParseError("tableau must be a JSON object")
    return from_dict(data)
