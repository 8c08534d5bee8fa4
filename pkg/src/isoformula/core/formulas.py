"""
isoformula.core.formulas
------------------------
Occurrence bookkeeping, substitution, sublanguage predicates and subformula
addressing for formula trees.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..models.formula import (
    And,
    Bot,
    Formula,
    Letter,
    Not,
    Occurrence,
    Or,
    Path,
    Polarity,
    SignedLetterMultiset,
    Top,
)
from ..utils.exceptions import LanguageError, PositionError


def children(f: Formula) -> Tuple[Formula, ...]:
    """Immediate subformulas, left to right."""
    if isinstance(f, Not):
        return (f.child,)
    if isinstance(f, (And, Or)):
        return (f.left, f.right)
    return ()


def letter_leaves(f: Formula) -> Iterator[Letter]:
    """Letter leaves of ``f`` from left to right."""
    stack: List[Formula] = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Letter):
            yield node
        else:
            stack.extend(reversed(children(node)))


def size(f: Formula) -> int:
    """|f|: the number of letter occurrences."""
    return sum(1 for _ in letter_leaves(f))


def letters(f: Formula) -> FrozenSet[str]:
    """The set of letters occurring in ``f``."""
    return frozenset(leaf.name for leaf in letter_leaves(f))


def is_diversified(f: Formula) -> bool:
    """True iff no letter occurs twice in ``f``."""
    seen = set()
    for leaf in letter_leaves(f):
        if leaf.name in seen:
            return False
        seen.add(leaf.name)
    return True


# ---- Sublanguages -----------------------------------------------------------


def _all_nodes(f: Formula) -> Iterator[Formula]:
    stack: List[Formula] = [f]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(children(node))


def has_constants(f: Formula) -> bool:
    return any(isinstance(node, (Top, Bot)) for node in _all_nodes(f))


def has_negation(f: Formula) -> bool:
    return any(isinstance(node, Not) for node in _all_nodes(f))


def is_and_or(f: Formula) -> bool:
    """Membership in the language with only letters, & and |."""
    return not has_constants(f) and not has_negation(f)


def is_neg_and_or(f: Formula) -> bool:
    """Membership in the language with letters, ~, & and | (no constants)."""
    return not has_constants(f)


def is_const_and_or(f: Formula) -> bool:
    """Membership in the language with T, F, letters, & and | (no negation)."""
    return not has_negation(f)


def is_neg_reduced(f: Formula) -> bool:
    """True iff negation occurs only directly in front of letters."""
    return all(isinstance(node.child, Letter) for node in _all_nodes(f) if isinstance(node, Not))


def require(predicate: bool, message: str) -> None:
    """Raise LanguageError with ``message`` unless ``predicate`` holds."""
    if not predicate:
        raise LanguageError(message)


# ---- Occurrences ------------------------------------------------------------


def occurrences(f: Formula) -> List[Occurrence]:
    """
    Enumerate letter occurrences from left to right.

    Polarity is filled in only when ``f`` is ¬-reduced; otherwise it is None.
    """
    with_polarity = is_neg_reduced(f)
    result: List[Occurrence] = []

    def walk(node: Formula, negated: bool) -> None:
        if isinstance(node, Letter):
            polarity: Optional[Polarity] = None
            if with_polarity:
                polarity = Polarity.NEGATIVE if negated else Polarity.POSITIVE
            result.append(Occurrence(len(result), node.name, polarity))
        elif isinstance(node, Not):
            walk(node.child, True)
        elif isinstance(node, (And, Or)):
            walk(node.left, negated)
            walk(node.right, negated)

    walk(f, False)
    return result


def signed_counts(f: Formula) -> SignedLetterMultiset:
    """
    Count occurrences of each letter per polarity.

    Raises:
        LanguageError: If ``f`` is not ¬-reduced
    """
    require(is_neg_reduced(f), f"signed counts need a ¬-reduced formula, got {f}")
    counts: Counter = Counter((occ.letter, occ.polarity) for occ in occurrences(f))
    return SignedLetterMultiset.from_counts(dict(counts))


# ---- Substitution -----------------------------------------------------------


def substitute_many(a: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Simultaneously replace every occurrence of each mapped letter."""
    if isinstance(a, Letter):
        return mapping.get(a.name, a)
    if isinstance(a, Not):
        return Not(substitute_many(a.child, mapping))
    if isinstance(a, And):
        return And(substitute_many(a.left, mapping), substitute_many(a.right, mapping))
    if isinstance(a, Or):
        return Or(substitute_many(a.left, mapping), substitute_many(a.right, mapping))
    return a


def substitute(a: Formula, p: str, b: Formula) -> Formula:
    """A^p_B: substitute ``b`` for every occurrence of the letter ``p`` in ``a``."""
    return substitute_many(a, {p: b})


def relabel_occurrences(f: Formula, names: Sequence[str]) -> Formula:
    """Rename the i-th letter occurrence of ``f`` to ``names[i]``."""
    if len(names) != size(f):
        raise PositionError(f"expected {size(f)} names, got {len(names)}")
    counter = iter(names)

    def walk(node: Formula) -> Formula:
        if isinstance(node, Letter):
            return Letter(next(counter))
        if isinstance(node, Not):
            return Not(walk(node.child))
        if isinstance(node, And):
            left = walk(node.left)
            return And(left, walk(node.right))
        if isinstance(node, Or):
            left = walk(node.left)
            return Or(left, walk(node.right))
        return node

    return walk(f)


def _match_letters(a: Formula, a1: Formula, sigma: Dict[str, str]) -> bool:
    """Extend ``sigma`` (letters of a1 -> letters of a) so that sigma(a1) = a."""
    if isinstance(a1, Letter):
        if not isinstance(a, Letter):
            return False
        image = sigma.setdefault(a1.name, a.name)
        return image == a.name
    if type(a) is not type(a1):
        return False
    return all(_match_letters(x, y, sigma) for x, y in zip(children(a), children(a1)))


def uniform_instance(a: Formula, a1: Formula) -> Optional[Dict[str, str]]:
    """
    Find the letter-for-letter substitution turning ``a1`` into ``a``.

    Returns:
        The substitution (letters of a1 to letters of a), or None when the
        trees differ in shape or a letter of a1 would need two images
    """
    sigma: Dict[str, str] = {}
    return sigma if _match_letters(a, a1, sigma) else None


def uniform_pair_instance(a: Formula, b: Formula, a1: Formula, b1: Formula) -> Optional[Dict[str, str]]:
    """Like uniform_instance, but one substitution must serve both pairs."""
    sigma: Dict[str, str] = {}
    if _match_letters(a, a1, sigma) and _match_letters(b, b1, sigma):
        return sigma
    return None


# ---- Subformula addressing --------------------------------------------------


def subformula_at(f: Formula, path: Path) -> Formula:
    node = f
    for depth, step in enumerate(path):
        kids = children(node)
        if step < 0 or step >= len(kids):
            raise PositionError(f"invalid path {list(path)}: no child {step} at depth {depth} of {f}")
        node = kids[step]
    return node


def replace_at(f: Formula, path: Path, replacement: Formula) -> Formula:
    """Return ``f`` with the subformula at ``path`` replaced."""
    if not path:
        return replacement
    step, rest = path[0], path[1:]
    if isinstance(f, Not) and step == 0:
        return Not(replace_at(f.child, rest, replacement))
    if isinstance(f, And) and step in (0, 1):
        if step == 0:
            return And(replace_at(f.left, rest, replacement), f.right)
        return And(f.left, replace_at(f.right, rest, replacement))
    if isinstance(f, Or) and step in (0, 1):
        if step == 0:
            return Or(replace_at(f.left, rest, replacement), f.right)
        return Or(f.left, replace_at(f.right, rest, replacement))
    raise PositionError(f"invalid path step {step} below {f}")


def positions(f: Formula) -> List[Path]:
    """All subformula paths of ``f`` in pre-order."""
    result: List[Path] = []

    def walk(node: Formula, path: Path) -> None:
        result.append(path)
        for i, child in enumerate(children(node)):
            walk(child, (*path, i))

    walk(f, ())
    return result


def occurrence_path(f: Formula, index: int) -> Path:
    """Path of the ``index``-th letter occurrence."""
    leaf_paths = [path for path in positions(f) if isinstance(subformula_at(f, path), Letter)]
    if index < 0 or index >= len(leaf_paths):
        raise PositionError(f"occurrence {index} out of range for {f} with {len(leaf_paths)} occurrences")
    return leaf_paths[index]


# ---- How two letters are joined ---------------------------------------------


class JoinConnective(str, Enum):
    CONJUNCTIVE = "conjunctive"
    DISJUNCTIVE = "disjunctive"


@dataclass(frozen=True)
class JoinKind:
    connective: JoinConnective
    direct: bool


def join_kind(a: Formula, p: str, q: str) -> JoinKind:
    """
    Describe how the letters ``p`` and ``q`` are joined in a diversified
    &|-formula: by the connective of their least common ancestor, directly when
    no subformula between that ancestor and either letter has the dual
    connective.

    Raises:
        LanguageError: If ``a`` is not a diversified &|-formula
        PositionError: If ``p`` or ``q`` is absent, or p == q
    """
    require(is_and_or(a), f"join_kind needs a formula built from letters, & and |, got {a}")
    require(is_diversified(a), f"join_kind needs a diversified formula, got {a}")
    found = {occ.letter: occurrence_path(a, occ.index) for occ in occurrences(a)}
    if p == q or p not in found or q not in found:
        raise PositionError(f"need two distinct letters of {a}, got {p!r} and {q!r}")
    path_p, path_q = found[p], found[q]
    split = 0
    while path_p[split] == path_q[split]:
        split += 1
    ancestor = subformula_at(a, path_p[:split])
    connective = JoinConnective.CONJUNCTIVE if isinstance(ancestor, And) else JoinConnective.DISJUNCTIVE
    dual = Or if isinstance(ancestor, And) else And

    def clean(path: Path) -> bool:
        return not any(isinstance(subformula_at(a, path[:k]), dual) for k in range(split + 1, len(path) + 1))

    return JoinKind(connective, clean(path_p) and clean(path_q))


# ---- Provenance labels ------------------------------------------------------


@dataclass(frozen=True)
class LabeledFormula:
    """
    A formula whose letter leaves are provenance labels.

    ``tree`` uses the labels as letter names; ``origin`` maps each label back to
    the letter it stands for. Labels are unique in a freshly labeled formula,
    and transformations that copy subtrees may repeat them.
    """

    tree: Formula
    origin: Mapping[str, str] = field(hash=False)

    @classmethod
    def label(cls, f: Formula) -> LabeledFormula:
        """Give the i-th letter occurrence of ``f`` the label ``@i``."""
        occs = occurrences(f)
        names = [label_name(occ.index) for occ in occs]
        return cls(relabel_occurrences(f, names), {name: occ.letter for name, occ in zip(names, occs)})

    def labels(self) -> List[str]:
        return [leaf.name for leaf in letter_leaves(self.tree)]

    def with_tree(self, tree: Formula) -> LabeledFormula:
        return LabeledFormula(tree, self.origin)

    def unlabel(self) -> Formula:
        return substitute_many(self.tree, {label: Letter(letter) for label, letter in self.origin.items()})


def label_name(index: int) -> str:
    return f"@{index}"


def label_index(label: str) -> int:
    return int(label[1:])
