"""
isoformula.core.construct
-------------------------
Occurrence-tracked constructions behind the isomorphism results, and the two
isomorphism deciders built on them.

Arrows are handled through their occurrence relations only; two arrows are
taken to be equal when their relations are. The constructions work over
formulas without negation. A ¬-reduced formula is brought into that shape by
reading each negated letter ~p as an opaque letter of its own; occurrence
indices do not change under this reading.
"""

from collections import defaultdict
from typing import Dict, List, Optional, Tuple

from ..models.arrows import Pair, TypedRelArrow
from ..models.formula import BOT, TOP, And, Formula, Letter, Not, Or, Polarity
from ..models.results import Extraction, Implant, IsoVerdict, IsoWitness
from ..utils.exceptions import ConstructionError, PositionError
from ..utils.logging_config import get_logger
from .canon import ac_canonical, derive, is_theorem_av, is_theorem_nav, nnf, system_name
from .formulas import (
    LabeledFormula,
    has_constants,
    is_const_and_or,
    is_neg_reduced,
    label_index,
    label_name,
    occurrence_path,
    occurrences,
    replace_at,
    require,
    signed_counts,
    size,
    subformula_at,
)
from .generators import copairing, first_injection, first_projection, pairing, second_injection, zero
from .linking import compose, converse, identity_arrow, is_bijective
from .rewriting import trace_bijection
from .semantics import are_equivalent, implies, letter_cap

logger = get_logger(__name__)

_NEGATED_PREFIX = "~"


# ---- Opaque reading of negated letters --------------------------------------


def _opaque(f: Formula) -> Formula:
    """Read each ~p of a ¬-reduced formula as a letter named ``~p``."""
    if isinstance(f, Not):
        assert isinstance(f.child, Letter)
        return Letter(_NEGATED_PREFIX + f.child.name)
    if isinstance(f, And):
        return And(_opaque(f.left), _opaque(f.right))
    if isinstance(f, Or):
        return Or(_opaque(f.left), _opaque(f.right))
    return f


def _opaque_cap(max_letters: Optional[int]) -> int:
    # p and ~p become two letters, so the cap stays counted on the original letters
    return 2 * letter_cap(max_letters)


def _letter_at(f: Formula, index: int) -> str:
    leaf = subformula_at(f, occurrence_path(f, index))
    assert isinstance(leaf, Letter)
    return leaf.name


# ---- Extraction of one occurrence -------------------------------------------


def _extract(node: Formula, label: str) -> Tuple[Formula, Formula]:
    """(A1, A2) with node <-> (label & A1) | A2, for a node containing ``label`` once."""
    if isinstance(node, Letter):
        return TOP, BOT
    assert isinstance(node, (And, Or))
    if label in _leaf_names(node.left):
        inner, rest = node.left, node.right
    else:
        inner, rest = node.right, node.left
    a1, a2 = _extract(inner, label)
    if isinstance(node, And):
        # the rest is copied into both parts
        return And(a1, rest), And(a2, rest)
    return a1, Or(a2, rest)


def _leaf_names(f: Formula) -> List[str]:
    return [occ.letter for occ in occurrences(f)]


def _first_occurrence(f: Formula, p: str) -> int:
    for occ in occurrences(f):
        if occ.letter == p:
            return occ.index
    raise PositionError(f"letter {p} does not occur in {f}")


def lemma4_extract(a: Formula, p: str, occ: Optional[int] = None, max_letters: Optional[int] = None) -> Extraction:
    """
    Split ``a`` around one occurrence of ``p`` as (p & A1) | A2.

    Walking down to the occurrence, a conjunction with remainder A'' turns
    (A1', A2') into (A1' & A'', A2' & A''); a disjunction turns it into
    (A1', A2' | A''); the occurrence itself gives (T, F).

    Args:
        a: Formula without negation
        p: The letter to extract
        occ: Occurrence index of that p in ``a``; the first one when omitted
        max_letters: Letter cap of the equivalence check

    Returns:
        A1, A2, the target (p & A1) | A2, and the occurrence relations tau from
        ``a`` to the target (each occurrence to every copy of itself) and sigma
        back (the converse of tau)

    Raises:
        LanguageError: If ``a`` contains negation
        PositionError: If ``occ`` is not an occurrence of ``p``
        LetterCapExceeded: If ``a`` has more letters than the cap
        ConstructionError: If the result is not equivalent to ``a``
    """
    require(is_const_and_or(a), f"extraction needs a formula without negation, got {a}")
    index = _first_occurrence(a, p) if occ is None else occ
    if _letter_at(a, index) != p:
        raise PositionError(f"occurrence {index} of {a} is {_letter_at(a, index)}, not {p}")

    labeled = LabeledFormula.label(a)
    label = label_name(index)
    a1, a2 = _extract(labeled.tree, label)
    target = labeled.with_tree(Or(And(Letter(label), a1), a2))

    tau = TypedRelArrow(
        a,
        target.unlabel(),
        frozenset((label_index(lab), j) for j, lab in enumerate(target.labels())),
    )
    result = Extraction(
        labeled.with_tree(a1).unlabel(),
        labeled.with_tree(a2).unlabel(),
        tau.target,
        tau,
        converse(tau),
    )
    if not are_equivalent(a, result.target, max_letters):
        raise ConstructionError(f"{a} <-> {result.target} is not a tautology")
    logger.debug(f"extracted {p}@{index} from {a}: {result.target}")
    return result


# ---- Implanting a conjunct --------------------------------------------------


def lemma5_implant(b: Formula, occ: int, p: str, max_letters: Optional[int] = None) -> Implant:
    """
    Replace occurrence ``occ`` of ``b`` by ``p & q``, where q is the letter there.

    Returns:
        B' and eta: p & B -> B', linking the prefixed p to the implanted one
        and every occurrence of B to its copy

    Raises:
        LanguageError: If ``b`` contains negation
        PositionError: If ``occ`` is out of range
        LetterCapExceeded: If p & B has more letters than ``max_letters``
        ConstructionError: If (p & B) -> B' is not a tautology
    """
    require(is_const_and_or(b), f"implanting needs a formula without negation, got {b}")
    path = occurrence_path(b, occ)
    b_prime = replace_at(b, path, And(Letter(p), subformula_at(b, path)))
    source = And(Letter(p), b)
    rel = {(0, occ)} | {(1 + i, i if i < occ else i + 1) for i in range(size(b))}
    eta = TypedRelArrow(source, b_prime, frozenset(rel))
    if not implies(source, b_prime, max_letters):
        raise ConstructionError(f"{source} -> {b_prime} is not a tautology")
    return Implant(b_prime, eta)


# ---- Single links -----------------------------------------------------------


def _annihilated(injection: TypedRelArrow, sigma: TypedRelArrow, a: Formula, b: Formula) -> TypedRelArrow:
    """The composite of an injection, sigma, an arbitrary A -> B and the zero arrow on B."""
    arbitrary = zero(a, b)
    return compose(compose(compose(injection, sigma), arbitrary), zero(b, b))


def _contract_at(b_prime: Formula, b: Formula, y: int) -> TypedRelArrow:
    """B' -> B taking the implanted p & p at occurrence y back to its first p."""
    rel = {(j, j) for j in range(y)} | {(y, y)} | {(j + 1, j) for j in range(y + 1, size(b))}
    return TypedRelArrow(b_prime, b, frozenset(rel))


def _single_link(a: Formula, b: Formula, x: int, y: int, max_letters: int) -> TypedRelArrow:
    """Assemble the arrow A -> B whose relation is {(x, y)}; no negation in a or b."""
    p = _letter_at(a, x)
    extraction = lemma4_extract(a, p, x, max_letters)
    target = extraction.target
    assert isinstance(target, Or) and isinstance(target.left, And)
    conjunct, a2 = target.left, target.right

    zeta1 = _annihilated(first_injection(conjunct, a2), extraction.sigma, a, b)
    zeta2 = _annihilated(second_injection(conjunct, a2), extraction.sigma, a, b)
    paired = pairing(first_projection(Letter(p), extraction.a1), zeta1)

    implant = lemma5_implant(b, y, p, max_letters)
    into_b = compose(compose(paired, implant.eta), _contract_at(implant.b_prime, b, y))
    mu = copairing(into_b, zeta2)
    return compose(extraction.tau, mu)


def lemma6_arrow(a: Formula, b: Formula, x: int, y: int, max_letters: Optional[int] = None) -> TypedRelArrow:
    """
    The arrow A -> B linking exactly occurrence ``x`` of ``a`` with occurrence
    ``y`` of ``b``.

    Negated letters of ¬-reduced inputs are treated as opaque letters, so x
    and y must carry the same letter with the same polarity.

    The letter cap counts the letters of ``a`` and ``b``; checks over the
    opaque reading get twice that.

    Raises:
        LanguageError: If either formula is not ¬-reduced
        PositionError: If x or y is out of range
        LetterCapExceeded: If a and b have more letters than ``max_letters``
        ConstructionError: If a -> b is not a tautology, the occurrences carry
            different letters, or the assembled relation is not {(x, y)}
    """
    for f in (a, b):
        require(is_neg_reduced(f), f"expected a ¬-reduced formula, got {f}")
    if not implies(a, b, max_letters):
        raise ConstructionError(f"{a} -> {b} is not a tautology")
    return _checked_link(a, b, _opaque(a), _opaque(b), x, y, _opaque_cap(max_letters))


def _checked_link(
    a: Formula, b: Formula, opaque_a: Formula, opaque_b: Formula, x: int, y: int, max_letters: int
) -> TypedRelArrow:
    letter_x, letter_y = _letter_at(opaque_a, x), _letter_at(opaque_b, y)
    if letter_x != letter_y:
        raise ConstructionError(f"occurrence {x} of {a} is {letter_x} but occurrence {y} of {b} is {letter_y}")
    link = _single_link(opaque_a, opaque_b, x, y, max_letters)
    if link.rel != frozenset({(x, y)}):
        raise ConstructionError(f"expected the single link ({x},{y}), assembled {link}")
    return TypedRelArrow(a, b, link.rel)


# ---- Isomorphisms -----------------------------------------------------------


def _witness(f: TypedRelArrow, g: TypedRelArrow) -> IsoWitness:
    gf_is_identity = compose(f, g).rel == identity_arrow(f.source).rel
    fg_is_identity = compose(g, f).rel == identity_arrow(f.target).rel
    return IsoWitness(f, g, gf_is_identity, fg_is_identity)


def _signed(f: Formula) -> List[Tuple[str, Optional[Polarity]]]:
    return [(occ.letter, occ.polarity) for occ in occurrences(f)]


def lemma7_iso(a: Formula, b: Formula, bij: TypedRelArrow, max_letters: Optional[int] = None) -> IsoWitness:
    """
    Build mutually inverse arrows between equivalent letter-homogeneous
    ¬-reduced formulas from a bijection of their occurrences.

    ``f`` is the union of the single links of ``bij``; ``g`` is the union of
    the single links of its converse. The letter cap counts the letters of
    ``a`` and ``b`` as in lemma6_arrow.

    Raises:
        LanguageError: If either formula is not ¬-reduced
        LetterCapExceeded: If a and b have more letters than ``max_letters``
        ConstructionError: If the formulas are not equivalent or not
            letter-homogeneous, if ``bij`` is not a bijection from ``a`` to
            ``b`` matching letters and polarities, or if the composites are
            not identities
    """
    for f in (a, b):
        require(is_neg_reduced(f), f"expected a ¬-reduced formula, got {f}")
    if not are_equivalent(a, b, max_letters):
        raise ConstructionError(f"{a} and {b} are not equivalent")
    counts_a, counts_b = signed_counts(a), signed_counts(b)
    if counts_a != counts_b:
        raise ConstructionError(f"{a} and {b} are not letter-homogeneous: {counts_a} vs {counts_b}")
    if bij.source != a or bij.target != b:
        raise ConstructionError(f"bijection is typed {bij.source} -> {bij.target}, expected {a} -> {b}")
    if not is_bijective(bij):
        raise ConstructionError(f"{bij} is not a bijection between the occurrences")
    signed_a, signed_b = _signed(a), _signed(b)
    for x, y in bij.pairs():
        if signed_a[x] != signed_b[y]:
            raise ConstructionError(f"bijection pairs occurrence {x} of {a} with occurrence {y} of {b}")

    opaque_a, opaque_b = _opaque(a), _opaque(b)
    cap = _opaque_cap(max_letters)
    f_rel: frozenset = frozenset()
    g_rel: frozenset = frozenset()
    for x, y in bij.pairs():
        f_rel |= _checked_link(a, b, opaque_a, opaque_b, x, y, cap).rel
        g_rel |= _checked_link(b, a, opaque_b, opaque_a, y, x, cap).rel

    witness = _witness(TypedRelArrow(a, b, f_rel), TypedRelArrow(b, a, g_rel))
    if not witness.verified:
        raise ConstructionError(f"composites of {witness.f} and {witness.g} are not identities")
    logger.debug(f"isomorphism {a} ~ {b} witnessed by {witness.f}")
    return witness


def canonical_bijection(a: Formula, b: Formula) -> TypedRelArrow:
    """
    Match the i-th occurrence of each signed letter of ``a`` with the i-th
    occurrence of the same signed letter of ``b``.

    Raises:
        ConstructionError: If the signed letters of a and b differ in number
    """
    positions_b: Dict[Tuple[str, Optional[Polarity]], List[int]] = defaultdict(list)
    for index, key in enumerate(_signed(b)):
        positions_b[key].append(index)
    used: Dict[Tuple[str, Optional[Polarity]], int] = defaultdict(int)
    rel: List[Pair] = []
    for index, key in enumerate(_signed(a)):
        candidates = positions_b[key]
        if used[key] >= len(candidates):
            raise ConstructionError(f"{a} and {b} are not letter-homogeneous")
        rel.append((index, candidates[used[key]]))
        used[key] += 1
    if len(rel) != size(b):
        raise ConstructionError(f"{a} and {b} are not letter-homogeneous")
    return TypedRelArrow(a, b, frozenset(rel))


def _homogeneity_reason(a: Formula, b: Formula) -> str:
    n_a, n_b = size(a), size(b)
    if n_a != n_b:
        return f"letter-homogeneity fails ({n_a} vs {n_b} occurrences)"
    return f"letter-homogeneity fails ({signed_counts(a)} vs {signed_counts(b)})"


def decide_iso_boolean(a: Formula, b: Formula, max_letters: Optional[int] = None) -> IsoVerdict:
    """
    Decide isomorphism in the Boolean sense: a <-> b is a tautology and the
    ¬-reduced forms have the same signed letter counts.

    On a positive answer the verdict carries a verified witness built from the
    canonical left-to-right bijection. Negation normal form keeps occurrence
    order, so the witness relations are read directly over ``a`` and ``b``.

    Raises:
        LetterCapExceeded: If the truth table would be too large
    """
    reduced_a, reduced_b = nnf(a)[0], nnf(b)[0]
    if not are_equivalent(reduced_a, reduced_b, max_letters):
        return IsoVerdict("boolean", False, reason="not equivalent")
    if signed_counts(reduced_a) != signed_counts(reduced_b):
        return IsoVerdict("boolean", False, reason=_homogeneity_reason(reduced_a, reduced_b))

    bij = canonical_bijection(reduced_a, reduced_b)
    reduced_witness = lemma7_iso(reduced_a, reduced_b, bij, max_letters)
    witness = IsoWitness(
        TypedRelArrow(a, b, reduced_witness.f.rel),
        TypedRelArrow(b, a, reduced_witness.g.rel),
        reduced_witness.gf_is_identity,
        reduced_witness.fg_is_identity,
    )
    return IsoVerdict("boolean", True, witness=witness, bijection=TypedRelArrow(a, b, bij.rel))


def decide_iso_generality(a: Formula, b: Formula) -> IsoVerdict:
    """
    Decide isomorphism in every permutational perfectly generalizable
    category: a <-> b must be a theorem of the equational system.

    Formulas without negation are decided in the &| system, others in the
    ~&| system; the verdict names the system used. On a positive answer the
    verdict carries the derivation and the occurrence bijection it induces.

    Raises:
        LanguageError: If either formula contains T or F
        ConstructionError: If the derivation does not induce a bijection onto ``b``
    """
    for f in (a, b):
        require(not has_constants(f), f"constants are not allowed here: {f}")
    system = system_name(a, b)
    theorem = is_theorem_av(a, b) if system == "S_and_or" else is_theorem_nav(a, b)
    if not theorem:
        reason = f"not a theorem of {system}: {ac_canonical(a).render()} vs {ac_canonical(b).render()}"
        return IsoVerdict("generality", False, reason=reason, system=system)

    trace = derive(a, b)
    bijection = trace_bijection(a, trace)
    if bijection.target != b or not is_bijective(bijection):
        raise ConstructionError(f"derivation of {a} -> {b} does not induce a bijection")
    witness = _witness(bijection, converse(bijection))
    logger.debug(f"{system} derivation of length {len(trace)} for {a} -> {b}")
    return IsoVerdict("generality", True, witness=witness, trace=trace, bijection=bijection, system=system)
