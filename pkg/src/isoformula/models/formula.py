"""
isoformula.models.formula
-------------------------
Formula trees over T, F, ~, &, | and letters, plus occurrence bookkeeping types.

Formulas are immutable: every node is a frozen dataclass, so structural
equality is ``==`` and formulas can be used as dict keys and set members.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, Optional, Tuple, Union


@dataclass(frozen=True)
class Top:
    """The constant true (printed ``T``)."""

    def __str__(self) -> str:
        return _render(self)


@dataclass(frozen=True)
class Bot:
    """The constant false (printed ``F``)."""

    def __str__(self) -> str:
        return _render(self)


@dataclass(frozen=True)
class Letter:
    """A propositional letter."""

    name: str

    def __str__(self) -> str:
        return _render(self)


@dataclass(frozen=True)
class Not:
    """Negation."""

    child: Formula

    def __str__(self) -> str:
        return _render(self)


@dataclass(frozen=True)
class And:
    """Binary conjunction."""

    left: Formula
    right: Formula

    def __str__(self) -> str:
        return _render(self)


@dataclass(frozen=True)
class Or:
    """Binary disjunction."""

    left: Formula
    right: Formula

    def __str__(self) -> str:
        return _render(self)


Formula = Union[Top, Bot, Letter, Not, And, Or]

# A subformula position: child indices from the root (0 = left/only child, 1 = right).
Path = Tuple[int, ...]

TOP = Top()
BOT = Bot()


def _render(f: Formula) -> str:
    from ..core.parser import to_text

    return to_text(f)


class Polarity(str, Enum):
    """Whether a letter occurrence of a ¬-reduced formula is under a negation."""

    POSITIVE = "pos"
    NEGATIVE = "neg"


class Side(str, Enum):
    """Which end of a typed arrow an occurrence belongs to."""

    SOURCE = "s"
    TARGET = "t"


@dataclass(frozen=True)
class Occurrence:
    """
    A letter occurrence.

    ``index`` counts letter occurrences from the left, starting at 0.
    ``polarity`` is only filled in for ¬-reduced formulas.
    """

    index: int
    letter: str
    polarity: Optional[Polarity] = None


SignedLetter = Tuple[str, Polarity]


@dataclass(frozen=True)
class SignedLetterMultiset:
    """Occurrence counts per (letter, polarity) of a ¬-reduced formula."""

    items: Tuple[Tuple[SignedLetter, int], ...]

    @classmethod
    def from_counts(cls, counts: Dict[SignedLetter, int]) -> SignedLetterMultiset:
        ordered = sorted(
            ((key, n) for key, n in counts.items() if n > 0),
            key=lambda item: (item[0][0], item[0][1].value),
        )
        return cls(tuple(ordered))

    def as_dict(self) -> Dict[SignedLetter, int]:
        return dict(self.items)

    def __getitem__(self, key: SignedLetter) -> int:
        return self.as_dict().get(key, 0)

    def __iter__(self) -> Iterator[SignedLetter]:
        return (key for key, _ in self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __str__(self) -> str:
        parts = [f"{'~' if pol is Polarity.NEGATIVE else ''}{letter}:{n}" for (letter, pol), n in self.items]
        return "{" + ", ".join(parts) + "}"
