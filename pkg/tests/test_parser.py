"""
Tests for formula text: parsing, printing and occurrence references.
"""

import pytest
from hypothesis import given, settings

from isoformula.core.parser import parse, parse_occurrence, parse_path, to_text, tokenize
from isoformula.models.formula import BOT, TOP, And, Letter, Not, Or
from isoformula.utils.exceptions import FormulaSyntaxError
from tests.strategies import formulas

p, q, r = Letter("p"), Letter("q"), Letter("r")


def test_parse_precedence():
    """Negation binds tighter than &, which binds tighter than |"""
    assert parse("p & (q | r)") == And(p, Or(q, r))
    assert parse("~~p") == Not(Not(p))
    assert parse("p & q | r") == Or(And(p, q), r)
    assert parse("~p & q") == And(Not(p), q)


def test_parse_left_associative():
    """Chains of the same connective nest to the left"""
    assert parse("p & q & r") == And(And(p, q), r)
    assert parse("p | q | r") == Or(Or(p, q), r)


def test_parse_constants_and_unicode():
    """T/F and the Unicode connectives are accepted"""
    assert parse("T") == TOP
    assert parse("F") == BOT
    assert parse("¬p ∧ ⊤ ∨ ⊥") == Or(And(Not(p), TOP), BOT)


def test_parse_letter_names():
    """Letters may carry digits and underscores after a lowercase start"""
    assert parse("q1 & x_2") == And(Letter("q1"), Letter("x_2"))


@pytest.mark.parametrize(
    "text",
    ["p &", "", "(p", "p q", "p & & q", "P", "True", "p $ q", ")"],
)
def test_parse_errors(text):
    """Malformed text raises FormulaSyntaxError"""
    with pytest.raises(FormulaSyntaxError):
        parse(text)


def test_syntax_error_position():
    """The error carries the offset of the offending token"""
    with pytest.raises(FormulaSyntaxError) as exc_info:
        parse("p & $")
    assert exc_info.value.position == 4


def test_parse_long_negation_run():
    """Runs of ~ longer than the recursion limit still parse"""
    f = parse("~" * 3000 + "p")
    for _ in range(3000):
        assert isinstance(f, Not)
        f = f.child
    assert f == Letter("p")


def test_tokenize_maps_aliases():
    """Unicode operators are tokenized as their ASCII forms"""
    tokens = tokenize("¬p∧q")
    assert [t.text for t in tokens if t.kind != "end"] == ["~", "p", "&", "q"]
    assert tokens[-1].kind == "end"


def test_print_minimal_parentheses():
    """Only needed parentheses are printed"""
    assert to_text(And(p, Or(q, r))) == "p & (q | r)"
    assert to_text(Not(Not(p))) == "~~p"
    assert to_text(TOP) == "T"
    assert to_text(Or(And(p, q), r)) == "p & q | r"
    assert to_text(And(p, And(q, r))) == "p & (q & r)"
    assert to_text(Not(And(p, q))) == "~(p & q)"


def test_str_uses_printer():
    """Formula nodes print through the text printer"""
    assert str(Or(p, Not(q))) == "p | ~q"


@settings(max_examples=300)
@given(formulas(max_leaves=10))
def test_print_parse_round_trip(f):
    """parse(to_text(f)) gives back f"""
    assert parse(to_text(f)) == f


def test_parse_occurrence():
    """Occurrence references come as p@2 or as a bare index"""
    assert parse_occurrence("p@2") == ("p", 2)
    assert parse_occurrence("0") == (None, 0)
    with pytest.raises(FormulaSyntaxError):
        parse_occurrence("p@")


def test_parse_path():
    """Paths are dotted child indices; root is empty"""
    assert parse_path("1.0") == (1, 0)
    assert parse_path("root") == ()
    assert parse_path("") == ()
    with pytest.raises(FormulaSyntaxError):
        parse_path("1.x")
