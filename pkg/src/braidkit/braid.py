"""
Braid words and the combinatorics of their closures.

A braid word is a sequence of nonzero integers: the letter ``g`` stands for the
Artin generator sigma_|g|, positive when ``g > 0`` and inverse when ``g < 0``.
The closure of a word on ``strands`` strands is a link whose components are the
cycles of the permutation underlying the word.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MalformedWord, NotAKnot, NotPositive, ParityViolation, StrandMismatch

__all__ = [
    "BraidWord",
    "ClosureSummary",
    "Verdict",
    "parse_braid",
    "is_positive",
    "closure_summary",
    "closure_permutation",
    "positive_braid_genus",
    "braid_positivity_obstruction",
    "mirror",
]

_SEPARATORS = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[int, ...]
    strands: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(g) for g in self.letters))
        if self.strands < 1:
            raise StrandMismatch(f"strand count must be positive, got {self.strands}")
        for g in self.letters:
            if g == 0:
                raise MalformedWord("0 is not a braid generator")
            if abs(g) > self.strands - 1:
                raise StrandMismatch(
                    f"letter {g} needs {abs(g) + 1} strands but the word has {self.strands}"
                )

    @classmethod
    def from_letters(cls, letters: Iterable[int], strands: int | None = None) -> "BraidWord":
        letters = tuple(int(g) for g in letters)
        if any(g == 0 for g in letters):
            raise MalformedWord("0 is not a braid generator")
        needed = max((abs(g) for g in letters), default=0) + 1
        if strands is None:
            strands = needed
        elif strands < needed:
            raise StrandMismatch(f"word needs {needed} strands, {strands} given")
        return cls(letters, strands)

    @property
    def word_length(self) -> int:
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return ", ".join(str(g) for g in self.letters)


@dataclass(frozen=True)
class ClosureSummary:
    components: int
    writhe: int

    @property
    def is_knot(self) -> bool:
        return self.components == 1


class Verdict(enum.Enum):
    OBSTRUCTED = "Obstructed"
    NOT_OBSTRUCTED = "NotObstructed"


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``"1, 2, -1"``, ``"1 2 -1"`` or ``"[1, 2, -1]"`` into a :class:`BraidWord`."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    tokens = [tok for tok in _SEPARATORS.split(body) if tok]
    letters = []
    for tok in tokens:
        try:
            letters.append(int(tok))
        except ValueError:
            raise MalformedWord(f"not an integer letter: {tok!r}") from None
    return BraidWord.from_letters(letters, strands)


def is_positive(w: BraidWord) -> bool:
    return all(g > 0 for g in w.letters)


def closure_permutation(w: BraidWord) -> list[int]:
    """Return ``perm`` (0-based) with ``perm[p]`` the bottom position of the strand starting at ``p``."""
    pos = list(range(w.strands))  # pos[s] = current position of strand s
    at = list(range(w.strands))  # at[p] = strand currently at position p
    for g in w.letters:
        i = abs(g) - 1
        a, b = at[i], at[i + 1]
        at[i], at[i + 1] = b, a
        pos[a], pos[b] = i + 1, i
    return pos


def closure_summary(w: BraidWord) -> ClosureSummary:
    perm = closure_permutation(w)
    seen = [False] * w.strands
    cycles = 0
    for start in range(w.strands):
        if seen[start]:
            continue
        cycles += 1
        p = start
        while not seen[p]:
            seen[p] = True
            p = perm[p]
    writhe = sum(1 if g > 0 else -1 for g in w.letters)
    return ClosureSummary(components=cycles, writhe=writhe)


def positive_braid_genus(w: BraidWord) -> int:
    """Seifert genus of the closure of a positive braid word that closes to a knot.

    Seifert's algorithm on a positive braid diagram gives a minimal genus surface,
    so ``2g - 1 = word_length - strands``.
    """
    if not is_positive(w):
        raise NotPositive(f"word {w} has a negative letter")
    summary = closure_summary(w)
    if not summary.is_knot:
        raise NotAKnot(f"closure has {summary.components} components")
    excess = w.word_length - w.strands
    if excess % 2 == 0:
        raise ParityViolation(
            f"word_length - strands = {excess} is even for a positive knot word"
        )
    return (excess + 1) // 2


def braid_positivity_obstruction(genus: int, crossing_number: int) -> Verdict:
    """A positive braid closure of genus g has crossing number at most 4g."""
    if crossing_number > 4 * genus:
        return Verdict.OBSTRUCTED
    return Verdict.NOT_OBSTRUCTED


def mirror(w: BraidWord) -> BraidWord:
    return BraidWord(tuple(-g for g in w.letters), w.strands)


def _as_word(word: BraidWord | Sequence[int]) -> BraidWord:
    if isinstance(word, BraidWord):
        return word
    return BraidWord.from_letters(word)
