"""
isoformula.core.parser
----------------------
Text syntax for formulas.

Grammar (ASCII, Unicode aliases T=⊤ F=⊥ ~=¬ &=∧ |=∨ accepted on input)::

    formula := disj
    disj    := conj ("|" conj)*
    conj    := neg ("&" neg)*
    neg     := "~" neg | atom
    atom    := letter | "T" | "F" | "(" formula ")"

Letters start with a lowercase ASCII letter followed by letters, digits or
underscores. Both binary operators associate to the left.
"""

import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..models.formula import BOT, TOP, And, Bot, Formula, Letter, Not, Or, Path, Top
from ..utils.exceptions import FormulaSyntaxError

_UNICODE_ALIASES = {"⊤": "T", "⊥": "F", "¬": "~", "∧": "&", "∨": "|"}

_TOKEN_RE = re.compile(r"\s*(?:(?P<word>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[~&|()])|(?P<bad>\S))")

LETTER_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")

# Binding strength used by the printer: higher binds tighter.
_PREC_OR = 1
_PREC_AND = 2
_PREC_NOT = 3
_PREC_ATOM = 4


@dataclass(frozen=True)
class Token:
    kind: str  # "letter", "const", "op", "end"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Split ``text`` into tokens, mapping Unicode connectives to their ASCII forms."""
    normalized = "".join(_UNICODE_ALIASES.get(ch, ch) for ch in text)
    tokens: List[Token] = []
    pos = 0
    while pos < len(normalized):
        match = _TOKEN_RE.match(normalized, pos)
        if match is None:
            # only trailing whitespace is left
            break
        if match.group("bad") is not None:
            raise FormulaSyntaxError(f"unexpected character {match.group('bad')!r}", match.start("bad"))
        if match.group("word") is not None:
            word = match.group("word")
            start = match.start("word")
            if word in ("T", "F"):
                tokens.append(Token("const", word, start))
            elif LETTER_RE.match(word):
                tokens.append(Token("letter", word, start))
            else:
                raise FormulaSyntaxError(
                    f"invalid letter name {word!r}: letters start with a lowercase letter, T and F are reserved",
                    start,
                )
        else:
            tokens.append(Token("op", match.group("op"), match.start("op")))
        pos = match.end()
    tokens.append(Token("end", "", len(normalized)))
    return tokens


class _Parser:
    """Recursive-descent parser over a token list."""

    def __init__(self, tokens: List[Token]) -> None:
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect_op(self, op: str) -> None:
        token = self.advance()
        if token.kind != "op" or token.text != op:
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise FormulaSyntaxError(f"expected {op!r}, found {found}", token.position)

    def at_op(self, op: str) -> bool:
        token = self.peek()
        return token.kind == "op" and token.text == op

    def parse_formula(self) -> Formula:
        return self.parse_disj()

    def parse_disj(self) -> Formula:
        result = self.parse_conj()
        while self.at_op("|"):
            self.advance()
            result = Or(result, self.parse_conj())
        return result

    def parse_conj(self) -> Formula:
        result = self.parse_neg()
        while self.at_op("&"):
            self.advance()
            result = And(result, self.parse_neg())
        return result

    def parse_neg(self) -> Formula:
        negations = 0
        while self.at_op("~"):
            self.advance()
            negations += 1
        result = self.parse_atom()
        for _ in range(negations):
            result = Not(result)
        return result

    def parse_atom(self) -> Formula:
        token = self.advance()
        if token.kind == "letter":
            return Letter(token.text)
        if token.kind == "const":
            return TOP if token.text == "T" else BOT
        if token.kind == "op" and token.text == "(":
            inner = self.parse_formula()
            self.expect_op(")")
            return inner
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise FormulaSyntaxError(f"expected a letter, T, F or '(', found {found}", token.position)


def parse(text: str) -> Formula:
    """
    Parse formula text.

    Args:
        text: Formula in the ASCII grammar (Unicode aliases allowed)

    Returns:
        The formula tree

    Raises:
        FormulaSyntaxError: On malformed input, with the offending position
    """
    parser = _Parser(tokenize(text))
    result = parser.parse_formula()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise FormulaSyntaxError(f"unexpected {trailing.text!r} after complete formula", trailing.position)
    return result


def _precedence(f: Formula) -> int:
    if isinstance(f, Or):
        return _PREC_OR
    if isinstance(f, And):
        return _PREC_AND
    if isinstance(f, Not):
        return _PREC_NOT
    return _PREC_ATOM


def _wrap(f: Formula, parenthesize: bool) -> str:
    text = to_text(f)
    return f"({text})" if parenthesize else text


def to_text(f: Formula) -> str:
    """Render ``f`` with the fewest parentheses that parse back to the same tree."""
    if isinstance(f, Top):
        return "T"
    if isinstance(f, Bot):
        return "F"
    if isinstance(f, Letter):
        return f.name
    if isinstance(f, Not):
        return "~" + _wrap(f.child, _precedence(f.child) < _PREC_NOT)
    if isinstance(f, (And, Or)):
        prec = _precedence(f)
        symbol = " & " if isinstance(f, And) else " | "
        # left associativity: a right operand of equal precedence needs parentheses
        return _wrap(f.left, _precedence(f.left) < prec) + symbol + _wrap(f.right, _precedence(f.right) <= prec)
    raise TypeError(f"not a formula: {f!r}")


_OCCURRENCE_RE = re.compile(r"^(?:(?P<letter>[a-z][A-Za-z0-9_]*)@)?(?P<index>\d+)$")
_PATH_RE = re.compile(r"^\d+(?:\.\d+)*$")


def parse_occurrence(text: str) -> Tuple[Optional[str], int]:
    """
    Read an occurrence reference: ``p@2`` (letter p at occurrence 2) or ``2``.

    Raises:
        FormulaSyntaxError: If the text is neither form
    """
    match = _OCCURRENCE_RE.match(text.strip())
    if match is None:
        raise FormulaSyntaxError(f"expected an occurrence such as p@0 or 0, got {text!r}", 0)
    return match.group("letter"), int(match.group("index"))


def parse_path(text: str) -> Path:
    """
    Read a subformula path such as ``1.0``; ``root`` or the empty string is the root.

    Raises:
        FormulaSyntaxError: If the text is not a dotted list of child indices
    """
    stripped = text.strip()
    if stripped in ("", "root"):
        return ()
    if not _PATH_RE.match(stripped):
        raise FormulaSyntaxError(f"expected a path such as 1.0 or root, got {text!r}", 0)
    return tuple(int(step) for step in stripped.split("."))
