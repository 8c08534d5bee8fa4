"""
isoformula.models.canonical
---------------------------
AC-canonical forms and rewrite traces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterator, List, Tuple, Union

from .formula import Path


@dataclass(frozen=True)
class TopNode:
    def render(self) -> str:
        return "T"


@dataclass(frozen=True)
class BotNode:
    def render(self) -> str:
        return "F"


@dataclass(frozen=True)
class PosAtom:
    name: str

    def render(self) -> str:
        return self.name


@dataclass(frozen=True)
class NegAtom:
    name: str

    def render(self) -> str:
        return "~" + self.name


@dataclass(frozen=True)
class AndN:
    """Flattened conjunction: at least two children, none an AndN, in canonical order."""

    children: Tuple[CanonicalForm, ...]

    def render(self) -> str:
        return "AND[" + ", ".join(child.render() for child in self.children) + "]"


@dataclass(frozen=True)
class OrN:
    """Flattened disjunction: at least two children, none an OrN, in canonical order."""

    children: Tuple[CanonicalForm, ...]

    def render(self) -> str:
        return "OR[" + ", ".join(child.render() for child in self.children) + "]"


CanonicalForm = Union[TopNode, BotNode, PosAtom, NegAtom, AndN, OrN]


class Axiom(str, Enum):
    ASSOC_AND = "assoc_and"
    ASSOC_OR = "assoc_or"
    COMM_AND = "comm_and"
    COMM_OR = "comm_or"
    DNEG = "dneg"
    DE_MORGAN_AND = "de_morgan_and"
    DE_MORGAN_OR = "de_morgan_or"
    NEG_TOP = "neg_top"
    NEG_BOT = "neg_bot"


class Direction(str, Enum):
    """L2R rewrites an instance of the axiom's left side into its right side."""

    L2R = "L->R"
    R2L = "R->L"

    def flipped(self) -> Direction:
        return Direction.R2L if self is Direction.L2R else Direction.L2R


@dataclass(frozen=True)
class RewriteStep:
    axiom: Axiom
    path: Path
    direction: Direction = Direction.L2R

    def inverse(self) -> RewriteStep:
        # every axiom rewrites the subterm rooted at ``path`` in place
        return RewriteStep(self.axiom, self.path, self.direction.flipped())

    def to_dict(self) -> Dict[str, Any]:
        return {"axiom": self.axiom.value, "path": list(self.path), "direction": self.direction.value}

    def __str__(self) -> str:
        where = "root" if not self.path else ".".join(str(i) for i in self.path)
        return f"{self.axiom.value}@{where} {self.direction.value}"


@dataclass(frozen=True)
class RewriteTrace:
    steps: Tuple[RewriteStep, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[RewriteStep]:
        return iter(self.steps)

    def __add__(self, other: RewriteTrace) -> RewriteTrace:
        return RewriteTrace(self.steps + other.steps)

    def reversed(self) -> RewriteTrace:
        """The trace that undoes this one, step by step."""
        return RewriteTrace(tuple(step.inverse() for step in reversed(self.steps)))

    def to_list(self) -> List[Dict[str, Any]]:
        return [step.to_dict() for step in self.steps]
