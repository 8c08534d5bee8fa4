"""
Tests for occurrence relations, their linkings and generalization.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isoformula.core.formulas import uniform_pair_instance
from isoformula.core.generators import (
    copairing,
    first_injection,
    first_projection,
    pairing,
    second_injection,
    second_projection,
)
from isoformula.core.linking import (
    compose,
    converse,
    diversified_generalization,
    eq_closure,
    format_links,
    gen_compose,
    generalize,
    identity_arrow,
    is_bijective,
    is_perfect,
    parse_links,
    union,
    zero_arrow,
)
from isoformula.core.parser import parse
from isoformula.core.semantics import are_equivalent
from isoformula.models.arrows import LinkEquivalence, TypedRelArrow
from isoformula.models.formula import Side
from isoformula.utils.exceptions import LinkingError

from .strategies import arrows, formulas, letter_arrows, linkings, permuted_arrows


def arrow(a, b, pairs):
    return TypedRelArrow(parse(a), parse(b), frozenset(pairs))


def test_identity_and_zero():
    """1_A links every occurrence to itself, 0 links nothing"""
    assert identity_arrow(parse("p & q")).rel == frozenset({(0, 0), (1, 1)})
    assert zero_arrow(parse("p"), parse("q & r")).rel == frozenset()
    assert eq_closure(zero_arrow(parse("p"), parse("q & r"))) == LinkEquivalence.discrete(1, 2)
    assert eq_closure(identity_arrow(parse("p"))) != LinkEquivalence.discrete(1, 1)
    assert str(identity_arrow(parse("p & q"))) == "{(0,0), (1,1)}"


def test_arrow_rejects_out_of_range_pairs():
    """Pairs must index existing occurrences"""
    with pytest.raises(LinkingError):
        arrow("p", "q", [(0, 1)])


def test_compose():
    """Composition follows the relation through the middle formula"""
    f = arrow("p & q", "q & p", [(0, 1)])
    g = arrow("q & p", "p", [(1, 0)])
    h = compose(f, g)
    assert (h.source, h.target) == (parse("p & q"), parse("p"))
    assert h.rel == frozenset({(0, 0)})


def test_compose_with_identity():
    """Identities are units of composition"""
    f = arrow("p & q", "q & p", [(0, 1), (1, 0)])
    assert compose(identity_arrow(f.source), f) == f
    assert compose(f, identity_arrow(f.target)) == f


def test_compose_type_mismatch():
    """The middle formulas must agree"""
    with pytest.raises(LinkingError):
        compose(arrow("p", "p", [(0, 0)]), arrow("q", "q", [(0, 0)]))


def test_union_and_converse():
    """Union merges parallel relations, converse swaps the ends"""
    f = arrow("p & p", "p", [(0, 0)])
    g = arrow("p & p", "p", [(1, 0)])
    assert union(f, g).rel == frozenset({(0, 0), (1, 0)})
    assert converse(f) == arrow("p", "p & p", [(0, 0)])
    with pytest.raises(LinkingError):
        union(f, arrow("p", "p", [(0, 0)]))


def test_is_bijective():
    """A bijection covers both sides exactly once"""
    assert is_bijective(arrow("p & q", "q & p", [(0, 1), (1, 0)]))
    assert not is_bijective(arrow("p & p", "p", [(0, 0)]))
    assert not is_bijective(arrow("p & q", "p & q", [(0, 0), (1, 0)]))


def test_eq_closure():
    """Related occurrences share a block, the rest are singletons"""
    linking = eq_closure(arrow("p & p", "p", [(0, 0), (1, 0)]))
    assert str(linking) == "s0 s1 t0"
    linking = eq_closure(arrow("p & q", "q & p", [(0, 1)]))
    assert str(linking) == "s0 t1 | s1 | t0"
    assert ((Side.SOURCE, 0), (Side.TARGET, 1)) in linking.blocks
    assert ((Side.SOURCE, 1),) in linking.blocks


def test_is_perfect():
    """Perfect linkings join exactly the occurrences of each letter"""
    a = parse("p & q")
    assert is_perfect(eq_closure(identity_arrow(a)), a, a)
    assert not is_perfect(eq_closure(zero_arrow(parse("p"), parse("p"))), parse("p"), parse("p"))
    assert not is_perfect(eq_closure(arrow("p & q", "q & p", [(0, 0)])), parse("p & q"), parse("q & p"))
    with pytest.raises(LinkingError):
        is_perfect(LinkEquivalence.discrete(1, 1), a, a)


def test_generalize_keeps_linked_occurrences_together():
    """Each block gets its own fresh letter"""
    a, b = parse("p & (~p | p)"), parse("p")
    pair = generalize(a, b, parse_links("s0 s1 | s2 t0", 3, 1))
    assert pair.a1 == parse("q1 & (~q1 | q2)")
    assert pair.b1 == parse("q2")
    assert pair.substitution == {"q1": "p", "q2": "p"}


def test_generalize_unlinked_occurrences_get_distinct_letters():
    """Singleton blocks are renamed apart"""
    pair = generalize(parse("p & (~p | p)"), parse("p"), parse_links("s0 t0", 3, 1))
    assert pair.a1 == parse("q1 & (~q2 | q3)")
    assert pair.b1 == parse("q1")


def test_generalize_identity():
    """The identity linking of a letter gives one fresh letter"""
    pair = generalize(parse("p"), parse("p"), eq_closure(identity_arrow(parse("p"))))
    assert (pair.a1, pair.b1) == (parse("q1"), parse("q1"))
    assert pair.substitution == {"q1": "p"}


def test_generalize_skips_used_letters_and_honors_prefix():
    """Fresh letters avoid letters of the pair"""
    pair = generalize(parse("q1 & q1"), parse("q1"), parse_links("s0 s1 t0", 2, 1))
    assert pair.a1 == parse("q2 & q2")
    pair = generalize(parse("p"), parse("p"), parse_links("s0 t0", 1, 1), prefix="x")
    assert pair.a1 == parse("x1")
    with pytest.raises(LinkingError):
        generalize(parse("p"), parse("p"), parse_links("s0 t0", 1, 1), prefix="1bad")


def test_generalize_rejects_mixed_block():
    """A block may not link two different letters"""
    with pytest.raises(LinkingError, match="links different letters"):
        generalize(parse("p & q"), parse("p"), parse_links("s0 s1 t0", 2, 1))


def test_gen_compose_matches_relational_composition():
    """Composing linkings agrees with the linking of the composite here"""
    f = arrow("p & q", "q & p", [(0, 1)])
    g = arrow("q & p", "p", [(1, 0)])
    composed = gen_compose(eq_closure(f), eq_closure(g))
    assert str(composed) == "s0 t0 | s1"
    assert composed == eq_closure(compose(f, g))


def test_gen_compose_joins_through_the_middle():
    """Two outer occurrences linked to the same middle block end up together"""
    first = parse_links("s0 t0 | s1 t1", 2, 2)
    second = parse_links("s0 s1 t0", 2, 1)
    assert str(gen_compose(first, second)) == "s0 s1 t0"


def test_gen_compose_size_mismatch():
    """The middle counts must agree"""
    with pytest.raises(LinkingError):
        gen_compose(LinkEquivalence.discrete(1, 2), LinkEquivalence.discrete(1, 1))


def test_parse_links():
    """Blocks are separated by | or , and unmentioned occurrences are singletons"""
    linking = parse_links("s0 t1, s1", 2, 2)
    assert str(linking) == "s0 t1 | s1 | t0"
    assert parse_links("", 1, 1) == LinkEquivalence.discrete(1, 1)
    assert parse_links(format_links(linking), 2, 2) == linking


@pytest.mark.parametrize("text", ["x0", "s", "s0 s0", "s0 | s0 t0", "s5"])
def test_parse_links_errors(text):
    """Malformed, repeated and out-of-range members are rejected"""
    with pytest.raises(LinkingError):
        parse_links(text, 2, 1)


def test_diversified_generalization():
    """A bijection generalizes to a diversified, equivalent pair"""
    report = diversified_generalization(arrow("p & q", "q & p", [(0, 1), (1, 0)]))
    assert report.pair.a1 == parse("q1 & q2")
    assert report.pair.b1 == parse("q2 & q1")
    assert report.a1_diversified and report.b1_diversified
    assert report.equivalent is True


def test_diversified_generalization_polarity_mismatch():
    """Links across polarities skip the equivalence check"""
    report = diversified_generalization(arrow("p | ~p", "~p | p", [(0, 1), (1, 0)]))
    assert report.equivalent is True
    report = diversified_generalization(arrow("p | ~p", "~p | p", [(0, 0), (1, 1)]))
    assert report.equivalent is None


def test_diversified_generalization_needs_bijection():
    """Non-bijective arrows are rejected"""
    with pytest.raises(LinkingError):
        diversified_generalization(arrow("p & p", "p", [(0, 0)]))


def test_projections_and_injections():
    """Structural arrows link the occurrences they carry over"""
    a, b = parse("p"), parse("q & r")
    assert first_projection(a, b).rel == frozenset({(0, 0)})
    assert second_projection(a, b).rel == frozenset({(1, 0), (2, 1)})
    assert first_injection(a, b).rel == frozenset({(0, 0)})
    assert second_injection(a, b).rel == frozenset({(0, 1), (1, 2)})


def test_pairing_and_copairing():
    """Pairing stacks targets, copairing stacks sources"""
    f = identity_arrow(parse("p"))
    g = zero_arrow(parse("p"), parse("q"))
    paired = pairing(f, g)
    assert paired.target == parse("p & q")
    assert paired.rel == frozenset({(0, 0)})
    copaired = copairing(converse(f), converse(zero_arrow(parse("p"), parse("p"))))
    assert copaired.source == parse("p | p")
    assert copaired.rel == frozenset({(0, 0)})
    with pytest.raises(LinkingError):
        pairing(f, identity_arrow(parse("q")))
    with pytest.raises(LinkingError):
        copairing(f, identity_arrow(parse("q")))


# ---- Properties ----------------------------------------------------------------


@given(st.lists(formulas(max_leaves=4), min_size=4, max_size=4), st.data())
@settings(max_examples=200, deadline=None)
def test_compose_is_associative_with_units(chain, data):
    """(f.g).h = f.(g.h) and identities are units"""
    a, b, c, d = chain
    f, g, h = data.draw(arrows(a, b)), data.draw(arrows(b, c)), data.draw(arrows(c, d))
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert compose(identity_arrow(a), f) == f
    assert compose(f, identity_arrow(b)) == f


@given(st.lists(st.integers(0, 4), min_size=4, max_size=4), st.data())
@settings(max_examples=200, deadline=None)
def test_gen_compose_is_associative(sizes, data):
    """Composing linkings does not depend on the bracketing"""
    first = data.draw(linkings(sizes[0], sizes[1]))
    second = data.draw(linkings(sizes[1], sizes[2]))
    third = data.draw(linkings(sizes[2], sizes[3]))
    assert gen_compose(gen_compose(first, second), third) == gen_compose(first, gen_compose(second, third))


@given(formulas(max_leaves=5), formulas(max_leaves=5), st.data())
@settings(max_examples=200, deadline=None)
def test_generalize_makes_the_linking_perfect(a, b, data):
    """The generalized pair is perfect for the linking and instantiates back to a, b"""
    linking = eq_closure(data.draw(letter_arrows(a, b)))
    pair = generalize(a, b, linking)
    assert is_perfect(linking, pair.a1, pair.b1)
    assert uniform_pair_instance(a, b, pair.a1, pair.b1) == pair.substitution


@given(permuted_arrows(max_leaves=6))
@settings(max_examples=200, deadline=None)
def test_diversified_generalization_of_bijections(f):
    """Bijections generalize to diversified pairs that instantiate back"""
    report = diversified_generalization(f)
    assert report.a1_diversified and report.b1_diversified
    assert uniform_pair_instance(f.source, f.target, report.pair.a1, report.pair.b1) == report.pair.substitution
    if report.equivalent is not None:
        assert are_equivalent(f.source, f.target)
