"""Words over ``{1_1, ..., 1_k, 2}`` and the Fibonacci differential poset Z(k).

A letter is stored as a plain ``int``: ``j`` in ``1..k`` is the letter ``1_j``
and :data:`TWO` (``0``) is the letter ``2``.  Words are stored leftmost-first.

Text format: letters separated by single spaces, ``1_j`` for a one and ``2``
for a two; the empty word is written ``@``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import IncompatibleAlphabet, ParseError

TWO = 0
EMPTY_TEXT = "@"


def one(j: int) -> int:
    return j


def is_two(letter: int) -> bool:
    return letter == TWO


def letter_weight(letter: int) -> int:
    return 2 if letter == TWO else 1


def format_letter(letter: int) -> str:
    return "2" if letter == TWO else f"1_{letter}"


@dataclass(frozen=True, slots=True)
class FibWord:
    k: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        for i, letter in enumerate(self.letters):
            if letter != TWO and not 1 <= letter <= self.k:
                raise ValueError(f"letter 1_{letter} at index {i} is outside 1_1..1_{self.k}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"FibWord(k={self.k}, {format_word(self)!r})"

    @property
    def rank(self) -> int:
        return rank(self)

    def sort_key(self) -> tuple[int, ...]:
        # 1_1 < ... < 1_k < 2, then plain lexicographic order on letters
        return tuple(self.k + 1 if letter == TWO else letter for letter in self.letters)


def parse_word(text: str, k: int) -> FibWord:
    text = text.strip()
    if text in ("", EMPTY_TEXT):
        return FibWord(k)
    letters = []
    for pos, token in enumerate(text.split()):
        if token == "2":
            letters.append(TWO)
            continue
        head, sep, tail = token.partition("_")
        if head != "1" or not sep or not tail.isdigit():
            raise ParseError(f"malformed letter {token!r}", pos)
        j = int(tail)
        if not 1 <= j <= k:
            raise ParseError(f"letter {token!r} needs 1 <= j <= {k}", pos)
        letters.append(j)
    return FibWord(k, tuple(letters))


def format_word(w: FibWord) -> str:
    if not w.letters:
        return EMPTY_TEXT
    return " ".join(format_letter(letter) for letter in w.letters)


def rank(w: FibWord) -> int:
    return sum(letter_weight(letter) for letter in w.letters)


def leading_twos(w: FibWord) -> int:
    """Length of the maximal run of 2's at the left end of ``w``."""
    r = 0
    for letter in w.letters:
        if letter != TWO:
            break
        r += 1
    return r


def first_one(w: FibWord) -> int | None:
    """Index of the leftmost ``1_j`` letter, or ``None`` if there is none."""
    for i, letter in enumerate(w.letters):
        if letter != TWO:
            return i
    return None


def _sorted(words) -> tuple[FibWord, ...]:
    return tuple(sorted(set(words), key=FibWord.sort_key))


def covers_down(w: FibWord) -> tuple[FibWord, ...]:
    """All ``z`` with ``z`` covered by ``w`` in Z(k), in canonical order."""
    letters = w.letters
    out = []
    for p in range(leading_twos(w)):
        for i in range(1, w.k + 1):
            out.append(FibWord(w.k, letters[:p] + (i,) + letters[p + 1:]))
    p = first_one(w)
    if p is not None:
        out.append(FibWord(w.k, letters[:p] + letters[p + 1:]))
    return _sorted(out)


def covers_up(z: FibWord) -> tuple[FibWord, ...]:
    """All ``w`` covering ``z`` in Z(k), in canonical order."""
    letters = z.letters
    out = []
    for p in range(leading_twos(z) + 1):
        for i in range(1, z.k + 1):
            out.append(FibWord(z.k, letters[:p] + (i,) + letters[p:]))
    p = first_one(z)
    if p is not None:
        out.append(FibWord(z.k, letters[:p] + (TWO,) + letters[p + 1:]))
    return _sorted(out)


def is_cover(z: FibWord, w: FibWord) -> bool:
    """True iff ``z`` is covered by ``w``."""
    if z.k != w.k:
        raise IncompatibleAlphabet(f"cannot compare words over k={z.k} and k={w.k}")
    if rank(w) != rank(z) + 1:
        return False
    return z in covers_down(w)


@lru_cache(maxsize=None)
def _rank_letters(k: int, n: int) -> tuple[tuple[int, ...], ...]:
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    out = [(j,) + rest for j in range(1, k + 1) for rest in _rank_letters(k, n - 1)]
    out += [(TWO,) + rest for rest in _rank_letters(k, n - 2)]
    return tuple(out)


def elements_of_rank(k: int, n: int) -> list[FibWord]:
    """All words of rank ``n``, sorted lexicographically with 1_1 < ... < 1_k < 2.

    The count ``f_n`` obeys ``f_n = k f_{n-1} + f_{n-2}``.
    """
    if k < 1 or n < 0:
        raise ValueError(f"need k >= 1 and n >= 0, got k={k}, n={n}")
    # the recursion above already emits words in sorted order
    return [FibWord(k, letters) for letters in _rank_letters(k, n)]


@lru_cache(maxsize=None)
def _chain_count(k: int, letters: tuple[int, ...]) -> int:
    if not letters:
        return 1
    return sum(_chain_count(k, z.letters) for z in covers_down(FibWord(k, letters)))


def chain_count(w: FibWord) -> int:
    """Number of saturated chains from the empty word up to ``w``."""
    return _chain_count(w.k, w.letters)


class DifferentialIdentity(NamedTuple):
    lhs: int
    rhs: int
    ok: bool


def verify_differential_identity(k: int, n: int) -> DifferentialIdentity:
    """Compare the sum of squared chain counts at rank ``n`` with ``k^n n!``."""
    lhs = sum(chain_count(w) ** 2 for w in elements_of_rank(k, n))
    rhs = k**n * math.factorial(n)
    return DifferentialIdentity(lhs, rhs, lhs == rhs)


def degree_law(k: int, w: FibWord) -> bool:
    if w.k != k:
        raise IncompatibleAlphabet(f"word is over k={w.k}, asked about k={k}")
    return len(covers_up(w)) - len(covers_down(w)) == k
