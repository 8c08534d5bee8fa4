"""
isoformula.core.semantics
-------------------------
Classical truth-table semantics and the constant-substitution construction
that isolates a subformula of a diversified &|-formula.
"""

import itertools
from typing import Callable, Dict, Iterable, Mapping, Optional

from ..models.config import config
from ..models.formula import BOT, TOP, And, Bot, Formula, Letter, Not, Or, Path, Top
from ..utils.exceptions import ConstructionError, EvaluationError, LetterCapExceeded
from ..utils.logging_config import get_logger
from .formulas import is_and_or, is_diversified, letters, require, subformula_at, substitute_many

logger = get_logger(__name__)

Valuation = Mapping[str, bool]
ConstantAssignment = Dict[str, Formula]

_Compiled = Callable[[Valuation], bool]


def evaluate(f: Formula, v: Valuation) -> bool:
    """
    Evaluate ``f`` under the valuation ``v``.

    Raises:
        EvaluationError: If ``v`` does not assign a letter of ``f``
    """
    return _compile(f)(v)


def _compile(f: Formula) -> _Compiled:
    """Turn ``f`` into a closure over valuations, so truth tables skip re-dispatching on node types."""
    if isinstance(f, Top):
        return lambda v: True
    if isinstance(f, Bot):
        return lambda v: False
    if isinstance(f, Letter):
        name = f.name

        def lookup(v: Valuation) -> bool:
            try:
                return bool(v[name])
            except KeyError:
                raise EvaluationError(f"valuation does not assign letter {name!r}") from None

        return lookup
    if isinstance(f, Not):
        inner = _compile(f.child)
        return lambda v: not inner(v)
    if isinstance(f, And):
        left, right = _compile(f.left), _compile(f.right)
        return lambda v: left(v) and right(v)
    if isinstance(f, Or):
        left, right = _compile(f.left), _compile(f.right)
        return lambda v: left(v) or right(v)
    raise TypeError(f"not a formula: {f!r}")


def letter_cap(max_letters: Optional[int] = None) -> int:
    """The explicit cap, or the configured one."""
    return config.max_letters if max_letters is None else max_letters


def _valuations(names: Iterable[str], max_letters: Optional[int]) -> Iterable[Dict[str, bool]]:
    ordered = sorted(names)
    cap = letter_cap(max_letters)
    if len(ordered) > cap:
        logger.warning(f"refusing truth table over {len(ordered)} letters (cap {cap})")
        raise LetterCapExceeded(f"{len(ordered)} distinct letters exceed the cap of {cap}")
    for values in itertools.product((False, True), repeat=len(ordered)):
        yield dict(zip(ordered, values))


def is_tautology(f: Formula, max_letters: Optional[int] = None) -> bool:
    """
    True iff ``f`` is true under every valuation of its letters.

    Raises:
        LetterCapExceeded: If ``f`` has more distinct letters than the cap
    """
    check = _compile(f)
    return all(check(v) for v in _valuations(letters(f), max_letters))


def are_equivalent(a: Formula, b: Formula, max_letters: Optional[int] = None) -> bool:
    """True iff a <-> b is a tautology (checked directly, without building the biconditional)."""
    check_a, check_b = _compile(a), _compile(b)
    return all(check_a(v) == check_b(v) for v in _valuations(letters(a) | letters(b), max_letters))


def implies(a: Formula, b: Formula, max_letters: Optional[int] = None) -> bool:
    """True iff a -> b is a tautology."""
    check_a, check_b = _compile(a), _compile(b)
    return all(check_b(v) for v in _valuations(letters(a) | letters(b), max_letters) if check_a(v))


def lemma1_assignment(a: Formula, pos: Path, max_letters: Optional[int] = None) -> ConstantAssignment:
    """
    Assign T or F to every letter of ``a`` outside the subformula at ``pos`` so
    that the substituted formula is equivalent to that subformula.

    Walking from the root to the subformula, the letters of the sibling of a
    conjunction on the way get T and those of the sibling of a disjunction get F.

    Args:
        a: Diversified formula built from letters, & and |
        pos: Path of the subformula B

    Returns:
        Mapping from each letter of a but not of B to TOP or BOT

    Raises:
        LanguageError: If ``a`` is not a diversified &|-formula
        PositionError: If ``pos`` does not address a subformula
    """
    require(is_and_or(a), f"expected a formula built from letters, & and |, got {a}")
    require(is_diversified(a), f"expected a diversified formula, got {a}")
    target = subformula_at(a, pos)

    assignment: ConstantAssignment = {}
    node = a
    for step in pos:
        assert isinstance(node, (And, Or))
        sibling = node.right if step == 0 else node.left
        constant = TOP if isinstance(node, And) else BOT
        for name in sorted(letters(sibling)):
            assignment[name] = constant
        node = node.left if step == 0 else node.right

    if not are_equivalent(substitute_many(a, assignment), target, max_letters):
        raise ConstructionError(f"constant assignment {assignment} does not isolate {target} in {a}")
    return assignment


def lemma1_substituted(a: Formula, pos: Path, max_letters: Optional[int] = None) -> Formula:
    """The formula ``a`` with the constant assignment of lemma1_assignment applied."""
    return substitute_many(a, lemma1_assignment(a, pos, max_letters))
