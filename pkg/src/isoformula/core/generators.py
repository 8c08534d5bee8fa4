"""
isoformula.core.generators
--------------------------
Occurrence relations of the structural arrows the constructions are
assembled from.

Occurrences of A & B (and of A | B) are numbered with those of A first, so
the occurrences of B start at |A|.
"""

from ..models.arrows import TypedRelArrow
from ..models.formula import And, Formula, Or
from ..utils.exceptions import LinkingError
from .formulas import size
from .linking import identity_arrow, zero_arrow

identity = identity_arrow
zero = zero_arrow


def first_projection(a: Formula, b: Formula) -> TypedRelArrow:
    """A & B -> A."""
    return TypedRelArrow(And(a, b), a, frozenset((i, i) for i in range(size(a))))


def second_projection(a: Formula, b: Formula) -> TypedRelArrow:
    """A & B -> B."""
    offset = size(a)
    return TypedRelArrow(And(a, b), b, frozenset((offset + j, j) for j in range(size(b))))


def first_injection(a: Formula, b: Formula) -> TypedRelArrow:
    """A -> A | B."""
    return TypedRelArrow(a, Or(a, b), frozenset((i, i) for i in range(size(a))))


def second_injection(a: Formula, b: Formula) -> TypedRelArrow:
    """B -> A | B."""
    offset = size(a)
    return TypedRelArrow(b, Or(a, b), frozenset((j, offset + j) for j in range(size(b))))


def pairing(f: TypedRelArrow, g: TypedRelArrow) -> TypedRelArrow:
    """
    <f, g>: C -> A & B from f: C -> A and g: C -> B.

    Raises:
        LinkingError: If f and g have different sources
    """
    if f.source != g.source:
        raise LinkingError(f"cannot pair arrows from {f.source} and from {g.source}")
    offset = f.target_size
    rel = f.rel | frozenset((s, offset + t) for s, t in g.rel)
    return TypedRelArrow(f.source, And(f.target, g.target), rel)


def copairing(f: TypedRelArrow, g: TypedRelArrow) -> TypedRelArrow:
    """
    [f, g]: A | B -> C from f: A -> C and g: B -> C.

    Raises:
        LinkingError: If f and g have different targets
    """
    if f.target != g.target:
        raise LinkingError(f"cannot copair arrows into {f.target} and into {g.target}")
    offset = f.source_size
    rel = f.rel | frozenset((offset + s, t) for s, t in g.rel)
    return TypedRelArrow(Or(f.source, g.source), f.target, rel)
