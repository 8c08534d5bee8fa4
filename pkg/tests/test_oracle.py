"""
Tests for the brute-force cross-checks.
"""

import pytest

from isoformula.core.canon import is_theorem_nav
from isoformula.core.construct import decide_iso_boolean
from isoformula.core.oracle import OracleAnswer, bounded_closure, oracle_theorem, oracle_witness_search
from isoformula.core.parser import parse
from isoformula.utils.exceptions import GuardExceeded, LanguageError
from isoformula.utils.validation import check_oracle_guards, check_witness_search_size


def test_closure_of_letter():
    """Nothing rewrites a bare letter"""
    assert bounded_closure(parse("p"), 3).reachable == frozenset({parse("p")})
    assert len(bounded_closure(parse("p & q"), 0)) == 1


def test_closure_of_conjunction():
    """One step reaches exactly the commuted conjunction"""
    closure = bounded_closure(parse("p & q"), 1)
    assert closure.reachable == frozenset({parse("p & q"), parse("q & p")})
    assert parse("p & q & r") not in closure


def test_closure_association_and_commutation():
    """Reassociation and commutation combine within the depth"""
    assert parse("r & (p & q)") in bounded_closure(parse("p & q & r"), 2)
    assert parse("~p & ~q") in bounded_closure(parse("~(p | q)"), 1)


def test_oracle_theorem():
    """YES when reachable, UNKNOWN otherwise"""
    assert oracle_theorem(parse("p & q"), parse("q & p"), 1) is OracleAnswer.YES
    assert oracle_theorem(parse("~~p & q"), parse("q & p"), 3) is OracleAnswer.YES
    assert oracle_theorem(parse("~(p & q)"), parse("~q | ~p"), 2) is OracleAnswer.YES
    assert oracle_theorem(parse("p"), parse("p"), 0) is OracleAnswer.YES
    assert oracle_theorem(parse("~(p & q)"), parse("~q | ~p"), 1) is OracleAnswer.UNKNOWN
    assert oracle_theorem(parse("p"), parse("q"), 8) is OracleAnswer.UNKNOWN
    assert oracle_theorem(parse("p & p"), parse("p"), 2) is OracleAnswer.UNKNOWN


def test_oracle_never_contradicts_canonical_decider():
    """Whatever the closure reaches is a theorem"""
    a = parse("~(p | q) & r")
    for b in bounded_closure(a, 2).reachable:
        assert is_theorem_nav(a, b)


def test_oracle_guards():
    """Depth and size caps are enforced"""
    with pytest.raises(GuardExceeded):
        bounded_closure(parse("p"), -1)
    with pytest.raises(GuardExceeded):
        oracle_theorem(parse("p"), parse("p"), 100)
    with pytest.raises(GuardExceeded):
        check_oracle_guards(leaves=3, depth=1, max_leaves=2)
    check_oracle_guards(leaves=2, depth=1, max_leaves=2, max_depth=1)


def test_witness_search_finds_swap():
    """The swap is the only witness for a commutation"""
    found = oracle_witness_search(parse("p & q"), parse("q & p"))
    assert found is not None
    assert found.rel == frozenset({(0, 1), (1, 0)})


def test_witness_search_absent():
    """Different sizes, letters or truth tables have no witness"""
    assert oracle_witness_search(parse("p & p"), parse("p")) is None
    assert oracle_witness_search(parse("p | ~p"), parse("q | ~q")) is None
    assert oracle_witness_search(parse("p"), parse("q")) is None


def test_witness_search_agrees_with_boolean_decider():
    """A witness exists exactly when the Boolean decider says iso"""
    pairs = [
        ("p | p & q", "p & (p | q)"),
        ("p & ~q", "~q & p"),
        ("p & (~p | p)", "p | p & ~p"),
        ("p & q", "p | q"),
    ]
    for a, b in pairs:
        found = oracle_witness_search(parse(a), parse(b))
        assert (found is not None) == decide_iso_boolean(parse(a), parse(b)).is_iso


def test_witness_search_requires_reduced_formulas():
    """Negations must sit on letters"""
    with pytest.raises(LanguageError):
        oracle_witness_search(parse("~(p & q)"), parse("~p | ~q"))


def test_witness_search_guard():
    """Too many occurrences are refused"""
    with pytest.raises(GuardExceeded):
        check_witness_search_size(9, max_occurrences=8)
    big = parse(" & ".join(["p"] * 9))
    with pytest.raises(GuardExceeded):
        oracle_witness_search(big, big)
