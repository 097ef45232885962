"""Phase-exact products of Pauli words.

A word is a fixed-length string of site letters from ``{1, e1, e2, e3}``,
encoded by the digits 0..3.  Letters square to 1, distinct nonzero letters
anticommute, and the orientation is fixed by ``e1*e2 = i*e3`` together with
its cyclic images; every other product is derived from these rules, never
tabulated separately.  Word products are computed site by site with the
accumulated power of i kept as an exact exponent mod 4, so identity checks
downstream never touch floating point.
"""

from __future__ import annotations

import functools
from typing import Iterable, Iterator

__all__ = [
    "LengthMismatchError",
    "PauliWord",
    "commute_sign",
    "compose_letters",
    "mul_words",
]


class LengthMismatchError(ValueError):
    """Two words of different length were combined."""


# Orientation of the letter algebra: e1*e2 = i*e3 and cyclic images.
# Reversed pairs pick up -i via anticommutation.
_CYCLE = {(1, 2): 3, (2, 3): 1, (3, 1): 2}


def compose_letters(a: int, b: int) -> tuple[int, int]:
    """Multiply two site letters exactly.

    Returns ``(k, c)`` such that ``a*b = i**k * c``.  The identity letter 0
    absorbs, equal letters square to the identity, and distinct nonzero
    letters produce the third letter with phase +i along the cyclic
    orientation and -i against it.
    """
    if a not in (0, 1, 2, 3) or b not in (0, 1, 2, 3):
        raise ValueError(f"site letters must be 0..3, got ({a!r}, {b!r})")
    if a == 0:
        return 0, b
    if b == 0:
        return 0, a
    if a == b:
        return 0, 0
    if (a, b) in _CYCLE:
        return 1, _CYCLE[a, b]
    return 3, _CYCLE[b, a]


@functools.total_ordering
class PauliWord:
    """Immutable word of site letters; the all-zero word is the unit.

    Words compare and sort lexicographically on their digit sequence, which
    is the canonical order used wherever output must be deterministic.
    """

    __slots__ = ("_letters",)

    def __init__(self, letters: Iterable[int]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("a word needs at least one site")
        for x in letters:
            if x not in (0, 1, 2, 3):
                raise ValueError(f"site letters must be 0..3, got {x!r}")
        self._letters = letters

    @classmethod
    def identity(cls, arity: int) -> "PauliWord":
        return cls((0,) * arity)

    @property
    def letters(self) -> tuple[int, ...]:
        return self._letters

    @property
    def arity(self) -> int:
        return len(self._letters)

    @property
    def is_identity(self) -> bool:
        return not any(self._letters)

    @property
    def name(self) -> str:
        """Symbol used in printed elements and the expression grammar."""
        if self.is_identity:
            return "I"
        digits = "".join(str(x) for x in self._letters)
        return ("e" if self.arity == 1 else "E") + digits

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self._letters)

    def __getitem__(self, idx: int) -> int:
        return self._letters[idx]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PauliWord):
            return self._letters == other._letters
        return NotImplemented

    def __lt__(self, other: "PauliWord") -> bool:
        if isinstance(other, PauliWord):
            return self._letters < other._letters
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._letters)

    def __repr__(self) -> str:
        return f"PauliWord({self._letters!r})"

    def __str__(self) -> str:
        return self.name


def mul_words(a: PauliWord, b: PauliWord) -> tuple[int, PauliWord]:
    """Site-wise product, returned as ``(k, word)`` with ``a*b = i**k * word``."""
    if a.arity != b.arity:
        raise LengthMismatchError(f"word lengths differ: {a.arity} vs {b.arity}")
    k = 0
    out = []
    for x, y in zip(a.letters, b.letters):
        ph, c = compose_letters(x, y)
        k += ph
        out.append(c)
    return k % 4, PauliWord(out)


def commute_sign(a: PauliWord, b: PauliWord) -> int:
    """+1 when ``a*b = b*a``, -1 when the words anticommute.

    Equals ``(-1)**m`` where m counts sites holding distinct nonzero letters.
    """
    if a.arity != b.arity:
        raise LengthMismatchError(f"word lengths differ: {a.arity} vs {b.arity}")
    m = sum(1 for x, y in zip(a.letters, b.letters) if x and y and x != y)
    return -1 if m % 2 else 1
