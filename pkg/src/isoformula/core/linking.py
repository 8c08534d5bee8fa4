"""
isoformula.core.linking
-----------------------
Occurrence relations between formulas (the Rel model) and their linking
partitions (the Gen model of split equivalences).

An arrow is represented only by the relation it induces between letter
occurrences of its source and its target. Its linking is the equivalence
closure of that relation over source and target occurrences together.
"""

import re
from typing import Dict, Iterable, List, Optional, Set, Tuple

from ..models.arrows import LinkEquivalence, Node, TypedRelArrow
from ..models.config import config
from ..models.formula import Formula, Side
from ..models.results import DiversifiedReport, GeneralizedPair
from ..utils.exceptions import LinkingError
from ..utils.logging_config import get_logger
from ..utils.validation import validate_fresh_prefix
from .formulas import (
    is_diversified,
    is_neg_reduced,
    letters,
    occurrences,
    relabel_occurrences,
    size,
)
from .semantics import are_equivalent
from .union_find import UnionFind

logger = get_logger(__name__)

_MEMBER = re.compile(r"^([st])(\d+)$")


# ---- Relations --------------------------------------------------------------


def identity_arrow(a: Formula) -> TypedRelArrow:
    """1_A: every occurrence of ``a`` to itself."""
    return TypedRelArrow(a, a, frozenset((i, i) for i in range(size(a))))


def zero_arrow(a: Formula, b: Formula) -> TypedRelArrow:
    """0: the empty relation, whose linking is the all-singletons partition."""
    return TypedRelArrow(a, b, frozenset())


def compose(f: TypedRelArrow, g: TypedRelArrow) -> TypedRelArrow:
    """
    Relational composite of f: A -> B followed by g: B -> C.

    Raises:
        LinkingError: If f's target is not g's source
    """
    if f.target != g.source:
        raise LinkingError(f"cannot compose: {f.target} is not {g.source}")
    successors: Dict[int, List[int]] = {}
    for middle, target in g.rel:
        successors.setdefault(middle, []).append(target)
    rel = frozenset((source, target) for source, middle in f.rel for target in successors.get(middle, ()))
    return TypedRelArrow(f.source, g.target, rel)


def union(f: TypedRelArrow, g: TypedRelArrow) -> TypedRelArrow:
    """
    The union of two parallel arrows.

    Raises:
        LinkingError: If the arrows do not share source and target
    """
    if f.source != g.source or f.target != g.target:
        raise LinkingError(f"cannot unite arrows {f.source} -> {f.target} and {g.source} -> {g.target}")
    return TypedRelArrow(f.source, f.target, f.rel | g.rel)


def converse(f: TypedRelArrow) -> TypedRelArrow:
    """The same relation read from target to source."""
    return TypedRelArrow(f.target, f.source, frozenset((t, s) for s, t in f.rel))


def is_bijective(f: TypedRelArrow) -> bool:
    """True iff the relation is the graph of a bijection between the occurrence sets."""
    if f.source_size != f.target_size or len(f.rel) != f.source_size:
        return False
    return {s for s, _ in f.rel} == set(range(f.source_size)) and {t for _, t in f.rel} == set(range(f.target_size))


# ---- Linkings ---------------------------------------------------------------


def _nodes(source_size: int, target_size: int) -> List[Node]:
    return [(Side.SOURCE, i) for i in range(source_size)] + [(Side.TARGET, j) for j in range(target_size)]


def eq_closure(f: TypedRelArrow) -> LinkEquivalence:
    """The finest partition of source and target occurrences merging every related pair."""
    forest: UnionFind[Node] = UnionFind(_nodes(f.source_size, f.target_size))
    for s, t in f.rel:
        forest.union((Side.SOURCE, s), (Side.TARGET, t))
    return LinkEquivalence.from_blocks(f.source_size, f.target_size, forest.classes())


def _letter_of(a: Formula, b: Formula) -> Dict[Node, str]:
    named: Dict[Node, str] = {(Side.SOURCE, occ.index): occ.letter for occ in occurrences(a)}
    named.update({(Side.TARGET, occ.index): occ.letter for occ in occurrences(b)})
    return named


def _check_sizes(linking: LinkEquivalence, a: Formula, b: Formula) -> None:
    if (linking.source_size, linking.target_size) != (size(a), size(b)):
        raise LinkingError(
            f"linking over {linking.source_size}+{linking.target_size} occurrences "
            f"does not fit {a} and {b} ({size(a)}+{size(b)})"
        )


def is_perfect(linking: LinkEquivalence, a: Formula, b: Formula) -> bool:
    """
    True iff two occurrences are linked exactly when they carry the same letter.

    Raises:
        LinkingError: If the linking does not fit the occurrence counts of a and b
    """
    _check_sizes(linking, a, b)
    letter_of = _letter_of(a, b)
    seen: Set[str] = set()
    for block in linking.blocks:
        block_letters = {letter_of[node] for node in block}
        if len(block_letters) != 1:
            return False
        (letter,) = block_letters
        if letter in seen:
            return False
        seen.add(letter)
    return True


def _fresh_names(count: int, prefix: str, taken: Iterable[str]) -> List[str]:
    avoid = set(taken)
    names: List[str] = []
    n = 1
    while len(names) < count:
        candidate = f"{prefix}{n}"
        if candidate not in avoid:
            names.append(candidate)
        n += 1
    return names


def generalize(a: Formula, b: Formula, linking: LinkEquivalence, prefix: Optional[str] = None) -> GeneralizedPair:
    """
    Relabel each linking block with its own fresh letter.

    Blocks are named in their canonical order as q1, q2, ... (with the
    configured prefix), skipping letters already used by ``a`` or ``b``.
    The result makes ``linking`` perfect, and a, b are uniform instances of
    a1, b1 under the returned substitution.

    Raises:
        LinkingError: If a block links occurrences of different letters
    """
    _check_sizes(linking, a, b)
    prefix = config.fresh_prefix if prefix is None else prefix
    validate_fresh_prefix(prefix)
    letter_of = _letter_of(a, b)
    fresh = _fresh_names(len(linking.blocks), prefix, letters(a) | letters(b))

    name_of: Dict[Node, str] = {}
    substitution: Dict[str, str] = {}
    for block, name in zip(linking.blocks, fresh):
        block_letters = sorted({letter_of[node] for node in block})
        if len(block_letters) != 1:
            members = " ".join(f"{side.value}{index}" for side, index in block)
            raise LinkingError(f"block {{{members}}} links different letters: {', '.join(block_letters)}")
        substitution[name] = block_letters[0]
        for node in block:
            name_of[node] = name

    a1 = relabel_occurrences(a, [name_of[(Side.SOURCE, i)] for i in range(linking.source_size)])
    b1 = relabel_occurrences(b, [name_of[(Side.TARGET, j)] for j in range(linking.target_size)])
    logger.debug(f"generalized {a} -> {b} to {a1} -> {b1}")
    return GeneralizedPair(a1, b1, substitution)


def gen_compose(first: LinkEquivalence, second: LinkEquivalence) -> LinkEquivalence:
    """
    Compose split equivalences over A, B and over B, C.

    Two outer occurrences end up linked iff they are connected through an
    alternating chain of blocks of ``first`` and ``second`` across B.

    Raises:
        LinkingError: If the middle occurrence counts differ
    """
    if first.target_size != second.source_size:
        raise LinkingError(
            f"cannot compose linkings through {first.target_size} and {second.source_size} middle occurrences"
        )
    # stages: 0 = A, 1 = B, 2 = C
    forest: UnionFind[Tuple[int, int]] = UnionFind()
    forest_nodes = (
        [(0, i) for i in range(first.source_size)]
        + [(1, j) for j in range(first.target_size)]
        + [(2, k) for k in range(second.target_size)]
    )
    for node in forest_nodes:
        forest.add(node)
    for linking, offset in ((first, 0), (second, 1)):
        for block in linking.blocks:
            staged = [(offset if side is Side.SOURCE else offset + 1, index) for side, index in block]
            for other in staged[1:]:
                forest.union(staged[0], other)

    blocks: List[List[Node]] = []
    for cls in forest.classes():
        outer = [(Side.SOURCE if stage == 0 else Side.TARGET, index) for stage, index in cls if stage != 1]
        if outer:
            blocks.append(outer)
    return LinkEquivalence.from_blocks(first.source_size, second.target_size, blocks)


# ---- Text codec -------------------------------------------------------------


def parse_links(text: str, source_size: int, target_size: int) -> LinkEquivalence:
    """
    Read blocks such as ``"s0 s1 | s2 t0"``.

    Blocks are separated by ``|`` or ``,`` and members by whitespace; ``s``
    members index source occurrences and ``t`` members target occurrences.
    Occurrences not mentioned become singleton blocks.

    Raises:
        LinkingError: If a member is malformed, out of range or repeated
    """
    blocks: List[List[Node]] = []
    for chunk in re.split(r"[|,]", text):
        members = chunk.split()
        if not members:
            continue
        block: List[Node] = []
        for member in members:
            match = _MEMBER.match(member)
            if not match:
                raise LinkingError(f"malformed link member {member!r}; expected s<index> or t<index>")
            side = Side.SOURCE if match.group(1) == "s" else Side.TARGET
            block.append((side, int(match.group(2))))
        blocks.append(block)

    if not blocks:
        return LinkEquivalence.discrete(source_size, target_size)
    mentioned = {node for block in blocks for node in block}
    for node in _nodes(source_size, target_size):
        if node not in mentioned:
            blocks.append([node])
    return LinkEquivalence.from_blocks(source_size, target_size, blocks)


def format_links(linking: LinkEquivalence) -> str:
    """The text form accepted by parse_links."""
    return str(linking)


# ---- Diversified generalization ---------------------------------------------


def _links_match_polarity(f: TypedRelArrow) -> bool:
    if not (is_neg_reduced(f.source) and is_neg_reduced(f.target)):
        return False
    source, target = occurrences(f.source), occurrences(f.target)
    return all(
        (source[s].letter, source[s].polarity) == (target[t].letter, target[t].polarity) for s, t in f.rel
    )


def diversified_generalization(f: TypedRelArrow, prefix: Optional[str] = None) -> DiversifiedReport:
    """
    Generalize a bijective arrow so that every block is one source and one
    target occurrence.

    Both generalized formulas are then diversified. When the original pair is
    equivalent and every link joins occurrences of equal polarity, the
    generalized pair is checked for equivalence as well; this is the condition
    a generalized arrow's type has to satisfy.

    Raises:
        LinkingError: If ``f`` is not bijective or links different letters
    """
    if not is_bijective(f):
        raise LinkingError(f"diversified generalization needs a bijective arrow, got {f}")
    pair = generalize(f.source, f.target, eq_closure(f), prefix)
    equivalent: Optional[bool] = None
    if _links_match_polarity(f) and are_equivalent(f.source, f.target):
        equivalent = are_equivalent(pair.a1, pair.b1)
    return DiversifiedReport(pair, is_diversified(pair.a1), is_diversified(pair.b1), equivalent)

