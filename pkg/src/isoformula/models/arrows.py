"""
isoformula.models.arrows
------------------------
Occurrence relations between two formulas and linking partitions over their
occurrences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

from ..utils.exceptions import LinkingError
from .formula import Formula, Side

Pair = Tuple[int, int]

# A linked element: which formula, and the occurrence index within it.
Node = Tuple[Side, int]


def _count_occurrences(f: Formula) -> int:
    from ..core.formulas import size

    return size(f)


@dataclass(frozen=True)
class TypedRelArrow:
    """
    A relation between the letter occurrences of ``source`` and of ``target``.

    Pairs are (source occurrence index, target occurrence index).
    """

    source: Formula
    target: Formula
    rel: FrozenSet[Pair]

    def __post_init__(self) -> None:
        if not isinstance(self.rel, frozenset):
            object.__setattr__(self, "rel", frozenset(self.rel))
        n_source, n_target = _count_occurrences(self.source), _count_occurrences(self.target)
        for s, t in self.rel:
            if not (0 <= s < n_source and 0 <= t < n_target):
                raise LinkingError(
                    f"pair ({s}, {t}) out of range for {n_source} source and {n_target} target occurrences"
                )

    @property
    def source_size(self) -> int:
        return _count_occurrences(self.source)

    @property
    def target_size(self) -> int:
        return _count_occurrences(self.target)

    def pairs(self) -> List[Pair]:
        """The relation as a sorted list."""
        return sorted(self.rel)

    def __str__(self) -> str:
        return "{" + ", ".join(f"({s},{t})" for s, t in self.pairs()) + "}"


def _node_key(node: Node) -> Tuple[int, int]:
    return (0 if node[0] is Side.SOURCE else 1, node[1])


@dataclass(frozen=True)
class LinkEquivalence:
    """
    A partition of the source and target occurrences of a typed arrow.

    Blocks are kept in a canonical order: members sorted source-first by index,
    blocks sorted by their first member. Two partitions are equal iff their
    block tuples are.
    """

    source_size: int
    target_size: int
    blocks: Tuple[Tuple[Node, ...], ...]

    def __post_init__(self) -> None:
        seen = set()
        ordered = []
        for block in self.blocks:
            if not block:
                raise LinkingError("linking blocks must be nonempty")
            for side, index in block:
                limit = self.source_size if side is Side.SOURCE else self.target_size
                if not 0 <= index < limit:
                    raise LinkingError(f"{side.value}{index} out of range")
                if (side, index) in seen:
                    raise LinkingError(f"{side.value}{index} appears in two blocks")
                seen.add((side, index))
            ordered.append(tuple(sorted(block, key=_node_key)))
        if len(seen) != self.source_size + self.target_size:
            raise LinkingError("linking blocks do not cover every occurrence")
        ordered.sort(key=lambda block: _node_key(block[0]))
        object.__setattr__(self, "blocks", tuple(ordered))

    @classmethod
    def from_blocks(cls, source_size: int, target_size: int, blocks: Iterable[Iterable[Node]]) -> LinkEquivalence:
        return cls(source_size, target_size, tuple(tuple(block) for block in blocks))

    @classmethod
    def discrete(cls, source_size: int, target_size: int) -> LinkEquivalence:
        """The all-singletons partition."""
        nodes = [(Side.SOURCE, i) for i in range(source_size)] + [(Side.TARGET, j) for j in range(target_size)]
        return cls(source_size, target_size, tuple((node,) for node in nodes))

    def __str__(self) -> str:
        return " | ".join(" ".join(f"{side.value}{index}" for side, index in block) for block in self.blocks)
