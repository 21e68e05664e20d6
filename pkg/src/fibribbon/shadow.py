"""Shadow lines on square diagrams and Fibonacci P-equivalence classes."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import EnumerationTooLarge
from .insertion import insert
from .permutation import ColoredPermutation, count_all, enumerate_all
from .tableau import Double, Single, Tableau

DEFAULT_MAX_STATES = 500_000

# (column, row, color), all 1-based
Mark = tuple[int, int, int]


@dataclass(frozen=True)
class ShadowLine:
    high: Mark
    right: Mark

    @property
    def single(self) -> bool:
        return self.high == self.right

    def rows(self) -> tuple[int, ...]:
        return (self.high[1],) if self.single else (self.high[1], self.right[1])


def shadow_lines(p: ColoredPermutation) -> list[ShadowLine]:
    """Pair the highest unused X with the rightmost unused X until none are left."""
    remaining = {(i, v, c) for i, (v, c) in enumerate(p.entries, 1)}
    lines = []
    while remaining:
        high = max(remaining, key=lambda m: m[1])
        right = max(remaining, key=lambda m: m[0])
        lines.append(ShadowLine(high, right))
        remaining -= {high, right}
    return lines


def p_from_shadow(p: ColoredPermutation) -> Tableau:
    """The insertion tableau P read straight off the shadow lines."""
    cols = []
    for line in shadow_lines(p):
        if line.single:
            _, row, color = line.high
            cols.append(Single(color, row))
        else:
            _, row, color = line.right
            cols.append(Double(color, row, line.high[1]))
    return Tableau(p.k, tuple(cols))


def positional_class(p: ColoredPermutation) -> set[ColoredPermutation]:
    """Permutations reachable by sliding each two-X line's higher element.

    The higher element of a two-X line may sit anywhere to the left of that
    line's rightmost element; every other entry keeps its relative order and
    all colors stay attached to their values.
    """
    movers = {}
    for line in shadow_lines(p):
        if not line.single:
            movers[line.high[1]] = line.right[1]
    base = [e for e in p.entries if e[0] not in movers]
    color_of = dict(p.entries)

    out = set()
    # insert movers in a fixed order; each goes anywhere before its partner
    order = sorted(movers)

    def place(seq, idx):
        if idx == len(order):
            out.add(ColoredPermutation(p.k, tuple(seq)))
            return
        value = order[idx]
        partner = movers[value]
        limit = next(i for i, e in enumerate(seq) if e[0] == partner)
        for slot in range(limit + 1):
            place(seq[:slot] + [(value, color_of[value])] + seq[slot:], idx + 1)

    place(base, 0)
    return out


def p_fiber_bruteforce(p: ColoredPermutation, max_states: int = DEFAULT_MAX_STATES) -> set[ColoredPermutation]:
    """Every colored permutation (same n and k) whose insertion tableau equals that of ``p``."""
    size = count_all(p.n, p.k)
    if size > max_states:
        raise EnumerationTooLarge(size, max_states)
    target = insert(p).P
    return {s for s in enumerate_all(p.n, p.k) if insert(s).P == target}


def same_colors(a: ColoredPermutation, b: ColoredPermutation) -> bool:
    """True if every value carries the same color in ``a`` and ``b``."""
    return dict(a.entries) == dict(b.entries)


def fixed_color_fiber(p: ColoredPermutation, max_states: int = DEFAULT_MAX_STATES) -> set[ColoredPermutation]:
    """The brute-force fiber restricted to permutations coloring each value as ``p`` does."""
    size = math.factorial(p.n)
    if size > max_states:
        raise EnumerationTooLarge(size, max_states)
    target = insert(p).P
    color_of = dict(p.entries)
    out = set()
    for values in itertools.permutations(range(1, p.n + 1)):
        s = ColoredPermutation(p.k, tuple((v, color_of[v]) for v in values))
        if insert(s).P == target:
            out.add(s)
    return out

