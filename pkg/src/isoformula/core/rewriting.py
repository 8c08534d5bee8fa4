"""
isoformula.core.rewriting
-------------------------
Single axiom applications at a position, and trace replay.

Every axiom is linear: both sides mention each metavariable exactly once, so
a step permutes letter occurrences without copying or dropping any.
"""

from typing import Iterator, List, Optional, Tuple

from ..models.arrows import TypedRelArrow
from ..models.canonical import Axiom, Direction, RewriteStep, RewriteTrace
from ..models.formula import BOT, TOP, And, Bot, Formula, Not, Or, Top
from ..utils.exceptions import PositionError, RewriteError
from .formulas import LabeledFormula, label_index, positions, replace_at, subformula_at

# Axioms of the equational systems proper, without the constant rewrites.
SYSTEM_AXIOMS: Tuple[Axiom, ...] = (
    Axiom.ASSOC_AND,
    Axiom.ASSOC_OR,
    Axiom.COMM_AND,
    Axiom.COMM_OR,
    Axiom.DNEG,
    Axiom.DE_MORGAN_AND,
    Axiom.DE_MORGAN_OR,
)


def _assoc(node: Formula, cls: type, direction: Direction) -> Optional[Formula]:
    if not isinstance(node, cls):
        return None
    if direction is Direction.L2R:
        # ((A o B) o C) -> (A o (B o C))
        if isinstance(node.left, cls):
            return cls(node.left.left, cls(node.left.right, node.right))
        return None
    # (A o (B o C)) -> ((A o B) o C)
    if isinstance(node.right, cls):
        return cls(cls(node.left, node.right.left), node.right.right)
    return None


def _de_morgan(node: Formula, inner: type, outer: type, direction: Direction) -> Optional[Formula]:
    if direction is Direction.L2R:
        # ~(A inner B) -> ~A outer ~B
        if isinstance(node, Not) and isinstance(node.child, inner):
            return outer(Not(node.child.left), Not(node.child.right))
        return None
    if isinstance(node, outer) and isinstance(node.left, Not) and isinstance(node.right, Not):
        return Not(inner(node.left.child, node.right.child))
    return None


def rewrite_node(node: Formula, axiom: Axiom, direction: Direction) -> Optional[Formula]:
    """Rewrite ``node`` at its root by one axiom instance, or return None if it is not a redex."""
    if axiom is Axiom.ASSOC_AND:
        return _assoc(node, And, direction)
    if axiom is Axiom.ASSOC_OR:
        return _assoc(node, Or, direction)
    if axiom is Axiom.COMM_AND:
        return And(node.right, node.left) if isinstance(node, And) else None
    if axiom is Axiom.COMM_OR:
        return Or(node.right, node.left) if isinstance(node, Or) else None
    if axiom is Axiom.DNEG:
        if direction is Direction.L2R:
            return node.child.child if isinstance(node, Not) and isinstance(node.child, Not) else None
        return Not(Not(node))
    if axiom is Axiom.DE_MORGAN_AND:
        return _de_morgan(node, And, Or, direction)
    if axiom is Axiom.DE_MORGAN_OR:
        return _de_morgan(node, Or, And, direction)
    if axiom is Axiom.NEG_TOP:
        if direction is Direction.L2R:
            return BOT if isinstance(node, Not) and isinstance(node.child, Top) else None
        return Not(TOP) if isinstance(node, Bot) else None
    if axiom is Axiom.NEG_BOT:
        if direction is Direction.L2R:
            return TOP if isinstance(node, Not) and isinstance(node.child, Bot) else None
        return Not(BOT) if isinstance(node, Top) else None
    raise ValueError(f"unknown axiom {axiom!r}")


def apply_step(f: Formula, step: RewriteStep) -> Formula:
    """
    Apply one rewrite step.

    Raises:
        RewriteError: If the path is invalid or the subformula there is not a redex
    """
    try:
        node = subformula_at(f, step.path)
    except PositionError as e:
        raise RewriteError(str(e)) from None
    rewritten = rewrite_node(node, step.axiom, step.direction)
    if rewritten is None:
        raise RewriteError(f"{step} does not match {node}")
    return replace_at(f, step.path, rewritten)


def replay(a: Formula, trace: RewriteTrace) -> Formula:
    """
    Replay ``trace`` from ``a`` and return the end formula.

    Raises:
        RewriteError: With ``step_index`` set to the first step that fails
    """
    current = a
    for index, step in enumerate(trace):
        try:
            current = apply_step(current, step)
        except RewriteError as e:
            raise RewriteError(str(e), step_index=index) from None
    return current


def single_steps(f: Formula, axioms: Tuple[Axiom, ...] = SYSTEM_AXIOMS) -> Iterator[Tuple[RewriteStep, Formula]]:
    """Every applicable single step at every position, in both directions, with its result."""
    for path in positions(f):
        node = subformula_at(f, path)
        for axiom in axioms:
            for direction in (Direction.L2R, Direction.R2L):
                rewritten = rewrite_node(node, axiom, direction)
                if rewritten is not None:
                    yield RewriteStep(axiom, path, direction), replace_at(f, path, rewritten)


def trace_bijection(a: Formula, trace: RewriteTrace) -> TypedRelArrow:
    """
    The occurrence bijection from ``a`` to the end of ``trace``.

    The trace is replayed on a labeled copy of ``a``; target occurrence j is
    linked to the source occurrence whose label it carries.
    """
    labeled = LabeledFormula.label(a)
    end = labeled.with_tree(replay(labeled.tree, trace))
    rel: List[Tuple[int, int]] = [(label_index(label), j) for j, label in enumerate(end.labels())]
    return TypedRelArrow(a, end.unlabel(), frozenset(rel))
