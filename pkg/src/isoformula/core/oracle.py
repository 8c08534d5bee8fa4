"""
isoformula.core.oracle
----------------------
Brute-force cross-checks for the deciders: bounded breadth-first search over
single axiom applications, and exhaustive search for isomorphism witnesses.
"""

import itertools
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

from ..models.arrows import Pair, TypedRelArrow
from ..models.canonical import Axiom, Direction
from ..models.formula import Formula, Polarity
from ..utils.exceptions import ConstructionError
from ..utils.logging_config import get_logger
from ..utils.validation import check_oracle_guards, check_witness_search_size
from .construct import lemma7_iso
from .formulas import is_neg_reduced, occurrences, require, size
from .rewriting import SYSTEM_AXIOMS, single_steps
from .semantics import are_equivalent

logger = get_logger(__name__)


class OracleAnswer(str, Enum):
    YES = "yes"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class RewriteClosure:
    """Formulas reachable from ``start`` in at most ``depth`` single steps."""

    start: Formula
    depth: int
    reachable: FrozenSet[Formula]

    def __contains__(self, f: object) -> bool:
        return f in self.reachable

    def __len__(self) -> int:
        return len(self.reachable)


def _closure_steps(f: Formula) -> Iterator[Formula]:
    """Results of single steps, leaving out double negation introduction."""
    for step, rewritten in single_steps(f, SYSTEM_AXIOMS):
        if step.axiom is Axiom.DNEG and step.direction is Direction.R2L:
            continue
        yield rewritten


def bounded_closure(a: Formula, depth: int) -> RewriteClosure:
    """
    Breadth-first closure of ``a`` under the axioms of the ~&| system, applied
    in both directions at every position.

    Double negations are removed but never introduced, so the closure of a
    letter is the letter alone.

    Raises:
        GuardExceeded: If ``a`` has too many letter leaves or ``depth`` is too large
    """
    check_oracle_guards(size(a), depth)
    seen: Set[Formula] = {a}
    frontier: List[Formula] = [a]
    for _ in range(depth):
        next_frontier: List[Formula] = []
        for f in frontier:
            for rewritten in _closure_steps(f):
                if rewritten not in seen:
                    seen.add(rewritten)
                    next_frontier.append(rewritten)
        if not next_frontier:
            break
        frontier = next_frontier
    logger.debug(f"closure of {a} to depth {depth}: {len(seen)} formulas")
    return RewriteClosure(a, depth, frozenset(seen))


def oracle_theorem(a: Formula, b: Formula, depth: int) -> OracleAnswer:
    """
    YES if ``b`` is reachable from ``a`` within ``depth`` steps, otherwise
    UNKNOWN; the search never answers no.

    Raises:
        GuardExceeded: As for bounded_closure
    """
    check_oracle_guards(max(size(a), size(b)), depth)
    if a == b or b in bounded_closure(a, depth):
        return OracleAnswer.YES
    return OracleAnswer.UNKNOWN


def _signed_positions(f: Formula) -> Dict[Tuple[str, Optional[Polarity]], List[int]]:
    grouped: Dict[Tuple[str, Optional[Polarity]], List[int]] = defaultdict(list)
    for occ in occurrences(f):
        grouped[(occ.letter, occ.polarity)].append(occ.index)
    return grouped


def _candidate_bijections(a: Formula, b: Formula) -> Iterator[FrozenSet[Pair]]:
    """Every bijection of occurrences that keeps letter and polarity."""
    groups_a, groups_b = _signed_positions(a), _signed_positions(b)
    if {key: len(v) for key, v in groups_a.items()} != {key: len(v) for key, v in groups_b.items()}:
        return
    keys = sorted(groups_a, key=lambda key: (key[0], key[1].value if key[1] else ""))
    per_key = [
        [list(zip(groups_a[key], image)) for image in itertools.permutations(groups_b[key])] for key in keys
    ]
    for choice in itertools.product(*per_key):
        yield frozenset(pair for pairs in choice for pair in pairs)


def oracle_witness_search(a: Formula, b: Formula) -> Optional[TypedRelArrow]:
    """
    Try every letter- and polarity-respecting bijection between the occurrences
    of ``a`` and ``b`` and return the first one that yields a verified
    isomorphism witness.

    Raises:
        LanguageError: If either formula is not ¬-reduced
        GuardExceeded: If either side has too many occurrences
    """
    for f in (a, b):
        require(is_neg_reduced(f), f"witness search needs ¬-reduced formulas, got {f}")
    check_witness_search_size(max(size(a), size(b)))
    if size(a) != size(b) or not are_equivalent(a, b):
        return None
    tried = 0
    for rel in _candidate_bijections(a, b):
        tried += 1
        bij = TypedRelArrow(a, b, rel)
        try:
            lemma7_iso(a, b, bij)
        except ConstructionError as e:
            logger.debug(f"bijection {bij} rejected: {e}")
            continue
        logger.debug(f"witness found after {tried} candidates")
        return bij
    return None
