"""Fomin growth diagrams over Z(k)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FibError, NotACover
from .fibword import TWO, FibWord, is_cover
from .permutation import ColoredPermutation, SquareDiagram, to_square_diagram
from .tableau import Tableau, chain_to_path


class LocalRuleError(FibError):
    def __init__(self, side: str, message: str):
        self.side = side
        super().__init__(f"{side}: {message}")


def _cover_or_equal(nu: FibWord, mu: FibWord, side: str) -> bool:
    """True if ``mu`` covers ``nu``, False if they are equal, error otherwise."""
    if mu == nu:
        return False
    if is_cover(nu, mu):
        return True
    raise LocalRuleError(side, f"{mu} neither equals nor covers {nu}")


def local_rule(nu: FibWord, mu1: FibWord, mu2: FibWord, x: int | None = None) -> FibWord:
    """Label of the top-right corner of a square.

    ``nu`` is the bottom-left corner, ``mu1`` the top-left, ``mu2`` the
    bottom-right, and ``x`` the color of the X inside the square (if any).
    """
    up1 = _cover_or_equal(nu, mu1, "mu1")
    up2 = _cover_or_equal(nu, mu2, "mu2")
    if x is not None and (up1 or up2):
        raise LocalRuleError("x", "an X may only sit in a square whose other three corners agree")
    if up1 and up2:
        lam = FibWord(nu.k, (TWO,) + nu.letters)
        if not (is_cover(mu1, lam) and is_cover(mu2, lam)):
            raise NotACover(f"{lam} does not cover both {mu1} and {mu2}")
        return lam
    if up1:
        return mu1
    if up2:
        return mu2
    if x is not None:
        if not 1 <= x <= nu.k:
            raise LocalRuleError("x", f"color {x} outside 1..{nu.k}")
        return FibWord(nu.k, (x,) + nu.letters)
    return nu


@dataclass(frozen=True)
class GrowthDiagram:
    """Corner labels ``corners[col][row]`` for ``0 <= col, row <= n``."""

    n: int
    corners: tuple[tuple[FibWord, ...], ...]
    diagram: SquareDiagram

    def corner(self, col: int, row: int) -> FibWord:
        return self.corners[col][row]

    @property
    def top_right(self) -> FibWord:
        return self.corners[self.n][self.n]

    def right_edge(self) -> list[FibWord]:
        return [self.corners[self.n][row] for row in range(self.n + 1)]

    def top_edge(self) -> list[FibWord]:
        return [self.corners[col][self.n] for col in range(self.n + 1)]


def build(p: ColoredPermutation) -> GrowthDiagram:
    n, k = p.n, p.k
    x_at = {(i, v): c for i, (v, c) in enumerate(p.entries, 1)}
    empty = FibWord(k)
    grid = [[empty] * (n + 1) for _ in range(n + 1)]
    for row in range(1, n + 1):
        for col in range(1, n + 1):
            grid[col][row] = local_rule(
                grid[col - 1][row - 1],
                grid[col - 1][row],
                grid[col][row - 1],
                x_at.get((col, row)),
            )
    return GrowthDiagram(n, tuple(tuple(c) for c in grid), to_square_diagram(p))


def extract_p_hat(g: GrowthDiagram) -> Tableau:
    return chain_to_path(g.right_edge())


def extract_q_hat(g: GrowthDiagram) -> Tableau:
    return chain_to_path(g.top_edge())


def format_grid(g: GrowthDiagram) -> str:
    """Corner words, top row first, columns separated by `` | ``."""
    rows = []
    for row in range(g.n, -1, -1):
        rows.append(" | ".join(str(g.corners[col][row]) for col in range(g.n + 1)))
    return "\n".join(rows)
