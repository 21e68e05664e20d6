"""k-colored permutations and their square diagrams.

Positions, values and rows are 1-based.  Text format is whitespace separated
``v^c`` tokens, e.g. ``"2^3 7^1 1^1"``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .errors import ParseError


@dataclass(frozen=True, slots=True)
class ColoredPermutation:
    k: int
    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        n = len(self.entries)
        seen = set()
        for pos, (value, color) in enumerate(self.entries, 1):
            if not 1 <= value <= n:
                raise ParseError(f"value {value} outside 1..{n}", pos)
            if value in seen:
                raise ParseError(f"repeated value {value}", pos)
            if not 1 <= color <= self.k:
                raise ParseError(f"color {color} outside 1..{self.k}", pos)
            seen.add(value)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return format_permutation(self)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.entries)

    @property
    def colors(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.entries)


@dataclass(frozen=True, slots=True)
class SquareDiagram:
    """One ``(column, row, color)`` cell per column and per row."""

    n: int
    cells: frozenset[tuple[int, int, int]]

    def __post_init__(self):
        cols = sorted(c for c, _, _ in self.cells)
        rows = sorted(r for _, r, _ in self.cells)
        expected = list(range(1, self.n + 1))
        if cols != expected or rows != expected:
            raise ValueError("square diagram must hit every row and column exactly once")

    def cell_in(self, column: int, row: int) -> int | None:
        """Color of the X in the given cell, or ``None`` if the cell is empty."""
        for c, r, color in self.cells:
            if c == column and r == row:
                return color
        return None

    def by_column(self) -> dict[int, tuple[int, int]]:
        return {c: (r, color) for c, r, color in self.cells}


def parse_permutation(text: str, k: int) -> ColoredPermutation:
    entries = []
    for pos, token in enumerate(text.split(), 1):
        value, sep, color = token.partition("^")
        if not sep or not value.isdigit() or not color.isdigit():
            raise ParseError(f"malformed entry {token!r}, expected v^c", pos)
        entries.append((int(value), int(color)))
    return ColoredPermutation(k, tuple(entries))


def format_permutation(p: ColoredPermutation) -> str:
    return " ".join(f"{v}^{c}" for v, c in p.entries)


def to_square_diagram(p: ColoredPermutation) -> SquareDiagram:
    return SquareDiagram(p.n, frozenset((i, v, c) for i, (v, c) in enumerate(p.entries, 1)))


def from_square_diagram(d: SquareDiagram, k: int) -> ColoredPermutation:
    cols = d.by_column()
    return ColoredPermutation(k, tuple(cols[i] for i in range(1, d.n + 1)))


def inverse(p: ColoredPermutation) -> ColoredPermutation:
    """Transpose of the square diagram; each color stays with its X."""
    out = [None] * p.n
    for i, (v, c) in enumerate(p.entries, 1):
        out[v - 1] = (i, c)
    return ColoredPermutation(p.k, tuple(out))


def color(p: ColoredPermutation) -> int:
    return sum(c - 1 for _, c in p.entries)


def count_all(n: int, k: int) -> int:
    return k**n * math.factorial(n)


def enumerate_all(n: int, k: int) -> Iterator[ColoredPermutation]:
    """Every k-colored permutation of size ``n``.

    Order: underlying permutations in lexicographic order, and for each one the
    colorings in lexicographic order.
    """
    if n < 0 or k < 1:
        raise ValueError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    colorings = list(itertools.product(range(1, k + 1), repeat=n))
    for values in itertools.permutations(range(1, n + 1)):
        for colors in colorings:
            yield ColoredPermutation(k, tuple(zip(values, colors)))
