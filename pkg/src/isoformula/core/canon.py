"""
isoformula.core.canon
---------------------
Decision procedures for the equational systems over &| and ~&|.

A formula is canonicalized by pushing negations to the letters and then
flattening and sorting conjunctions and disjunctions. Two formulas are
provably equivalent from associativity, commutativity, double negation and
De Morgan exactly when their canonical forms coincide. Every canonicalization
is also available as a replayable rewrite trace, so a derivation between two
theorems is the trace of one followed by the reversed trace of the other.
"""

from typing import Any, List, Optional, Tuple

from ..models.canonical import (
    AndN,
    Axiom,
    BotNode,
    CanonicalForm,
    Direction,
    NegAtom,
    OrN,
    PosAtom,
    RewriteStep,
    RewriteTrace,
    TopNode,
)
from ..models.formula import BOT, TOP, And, Bot, Formula, Letter, Not, Or, Path, Top
from ..utils.exceptions import NotATheoremError
from ..utils.logging_config import get_logger
from .formulas import has_negation, is_and_or, is_neg_and_or, require, subformula_at
from .rewriting import apply_step

logger = get_logger(__name__)

# Rank of each node kind in the canonical child order.
_RANK_BOT = 0
_RANK_TOP = 1
_RANK_POS = 2
_RANK_NEG = 3
_RANK_AND = 4
_RANK_OR = 5


class _TraceBuilder:
    """Applies rewrite steps to a current formula and records them."""

    def __init__(self, start: Formula) -> None:
        self.formula = start
        self.steps: List[RewriteStep] = []

    def at(self, path: Path) -> Formula:
        return subformula_at(self.formula, path)

    def apply(self, axiom: Axiom, path: Path, direction: Direction = Direction.L2R) -> None:
        step = RewriteStep(axiom, path, direction)
        self.formula = apply_step(self.formula, step)
        self.steps.append(step)

    def trace(self) -> RewriteTrace:
        return RewriteTrace(tuple(self.steps))


# ---- Negation normal form ---------------------------------------------------


def _negation_redex(f: Formula, path: Path = ()) -> Optional[Tuple[Path, Axiom]]:
    """The outermost-leftmost negation redex, if any."""
    if isinstance(f, Not):
        child = f.child
        if isinstance(child, Not):
            return path, Axiom.DNEG
        if isinstance(child, And):
            return path, Axiom.DE_MORGAN_AND
        if isinstance(child, Or):
            return path, Axiom.DE_MORGAN_OR
        if isinstance(child, Top):
            return path, Axiom.NEG_TOP
        if isinstance(child, Bot):
            return path, Axiom.NEG_BOT
        return None
    if isinstance(f, (And, Or)):
        return _negation_redex(f.left, (*path, 0)) or _negation_redex(f.right, (*path, 1))
    return None


def _nnf_into(builder: _TraceBuilder) -> None:
    while True:
        redex = _negation_redex(builder.formula)
        if redex is None:
            return
        path, axiom = redex
        builder.apply(axiom, path)


def nnf(f: Formula) -> Tuple[Formula, RewriteTrace]:
    """
    ¬-reduce ``f`` by De Morgan, double negation and ~T -> F / ~F -> T.

    Returns:
        The ¬-reduced formula and the trace that rewrites ``f`` into it
    """
    builder = _TraceBuilder(f)
    _nnf_into(builder)
    return builder.formula, builder.trace()


def nnf_formula(f: Formula) -> Formula:
    """nnf without the trace."""
    return nnf(f)[0]


# ---- Canonical forms --------------------------------------------------------


def sort_key(c: CanonicalForm) -> Tuple[Any, ...]:
    """Total order on canonical forms: F < T < p < ~p < AND < OR, then names, arity, children."""
    if isinstance(c, BotNode):
        return (_RANK_BOT,)
    if isinstance(c, TopNode):
        return (_RANK_TOP,)
    if isinstance(c, PosAtom):
        return (_RANK_POS, c.name)
    if isinstance(c, NegAtom):
        return (_RANK_NEG, c.name)
    rank = _RANK_AND if isinstance(c, AndN) else _RANK_OR
    return (rank, len(c.children), tuple(sort_key(child) for child in c.children))


def _canonical_of_reduced(f: Formula) -> CanonicalForm:
    if isinstance(f, Top):
        return TopNode()
    if isinstance(f, Bot):
        return BotNode()
    if isinstance(f, Letter):
        return PosAtom(f.name)
    if isinstance(f, Not):
        assert isinstance(f.child, Letter)
        return NegAtom(f.child.name)
    if isinstance(f, (And, Or)):
        node_type = AndN if isinstance(f, And) else OrN
        flat: List[CanonicalForm] = []
        for side in (f.left, f.right):
            child = _canonical_of_reduced(side)
            if isinstance(child, node_type):
                flat.extend(child.children)
            else:
                flat.append(child)
        return node_type(tuple(sorted(flat, key=sort_key)))
    raise TypeError(f"not a formula: {f!r}")


def ac_canonical(f: Formula) -> CanonicalForm:
    """The flattened, sorted negation normal form of ``f`` (duplicates kept)."""
    return _canonical_of_reduced(nnf_formula(f))


def render(c: CanonicalForm) -> str:
    """Deterministic text such as ``AND[p, p, q]``."""
    return c.render()


def representative(c: CanonicalForm) -> Formula:
    """The binary formula a canonicalization trace ends in: right-nested chains in canonical order."""
    if isinstance(c, TopNode):
        return TOP
    if isinstance(c, BotNode):
        return BOT
    if isinstance(c, PosAtom):
        return Letter(c.name)
    if isinstance(c, NegAtom):
        return Not(Letter(c.name))
    node_type = And if isinstance(c, AndN) else Or
    items = [representative(child) for child in c.children]
    result = items[-1]
    for item in reversed(items[:-1]):
        result = node_type(item, result)
    return result


def _chain_elements(builder: _TraceBuilder, path: Path, node_type: type) -> List[Path]:
    """Right-associate the chain at ``path`` and return the paths of its elements."""
    assoc = Axiom.ASSOC_AND if node_type is And else Axiom.ASSOC_OR
    cursor = path
    elements: List[Path] = []
    while True:
        while isinstance(builder.at(cursor).left, node_type):
            builder.apply(assoc, cursor, Direction.L2R)
        elements.append((*cursor, 0))
        if isinstance(builder.at(cursor).right, node_type):
            cursor = (*cursor, 1)
        else:
            elements.append((*cursor, 1))
            return elements


def _swap_adjacent(builder: _TraceBuilder, chain: List[Path], j: int, node_type: type) -> None:
    """Exchange elements j and j+1 of a right-nested chain."""
    assoc = Axiom.ASSOC_AND if node_type is And else Axiom.ASSOC_OR
    comm = Axiom.COMM_AND if node_type is And else Axiom.COMM_OR
    if j == len(chain) - 2:
        # the last two elements hang off the same node
        builder.apply(comm, chain[j][:-1])
        return
    node_path = chain[j][:-1]
    builder.apply(assoc, node_path, Direction.R2L)
    builder.apply(comm, (*node_path, 0))
    builder.apply(assoc, node_path, Direction.L2R)


def _sort_into(builder: _TraceBuilder, path: Path) -> None:
    node = builder.at(path)
    if not isinstance(node, (And, Or)):
        return
    node_type = And if isinstance(node, And) else Or
    chain = _chain_elements(builder, path, node_type)
    for element in chain:
        _sort_into(builder, element)
    keys = [sort_key(_canonical_of_reduced(builder.at(element))) for element in chain]
    for rounds in range(len(chain)):
        for j in range(len(chain) - 1 - rounds):
            if keys[j] > keys[j + 1]:
                _swap_adjacent(builder, chain, j, node_type)
                keys[j], keys[j + 1] = keys[j + 1], keys[j]


def canonicalization_trace(f: Formula) -> Tuple[Formula, RewriteTrace]:
    """
    Rewrite ``f`` into the representative of its canonical form.

    Returns:
        The representative and the trace leading to it from ``f``
    """
    builder = _TraceBuilder(f)
    _nnf_into(builder)
    _sort_into(builder, ())
    return builder.formula, builder.trace()


# ---- Theoremhood ------------------------------------------------------------


def is_theorem_av(a: Formula, b: Formula) -> bool:
    """
    Decide whether a <-> b is a theorem of the &| system.

    Raises:
        LanguageError: If either formula uses ~, T or F
    """
    for f in (a, b):
        require(is_and_or(f), f"expected a formula built from letters, & and |, got {f}")
    return ac_canonical(a) == ac_canonical(b)


def is_theorem_nav(a: Formula, b: Formula) -> bool:
    """
    Decide whether a <-> b is a theorem of the ~&| system.

    Raises:
        LanguageError: If either formula contains T or F
    """
    for f in (a, b):
        require(is_neg_and_or(f), f"constants are not part of the ~&| language: {f}")
    ca, cb = ac_canonical(a), ac_canonical(b)
    logger.debug(f"canonical forms {ca.render()} vs {cb.render()}")
    return ca == cb


def system_name(a: Formula, b: Formula) -> str:
    """Name of the smallest system whose language contains both formulas."""
    return "S_neg_and_or" if has_negation(a) or has_negation(b) else "S_and_or"


def derive(a: Formula, b: Formula) -> RewriteTrace:
    """
    A rewrite trace from ``a`` to ``b``.

    The trace canonicalizes ``a`` and then undoes the canonicalization of ``b``;
    it is not the shortest derivation. Constants are accepted, in which case the
    ~T/~F rewrites may appear.

    Raises:
        NotATheoremError: If ``a`` and ``b`` have different canonical forms
    """
    end_a, trace_a = canonicalization_trace(a)
    end_b, trace_b = canonicalization_trace(b)
    if end_a != end_b:
        raise NotATheoremError(f"{a} <-> {b} is not a theorem: {render(ac_canonical(a))} vs {render(ac_canonical(b))}")
    trace = trace_a + trace_b.reversed()
    logger.debug(f"derived {a} -> {b} in {len(trace)} steps")
    return trace
