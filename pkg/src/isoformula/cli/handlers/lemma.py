"""
isoformula.cli.handlers.lemma
-----------------------------
Handler for the lemma command: thin wrappers over the constructions, each
reporting whether its internal checks passed.
"""

from argparse import Namespace
from typing import Callable, Dict, List, Tuple

from ...core.construct import lemma4_extract, lemma5_implant, lemma6_arrow
from ...core.formulas import positions, subformula_at
from ...core.parser import parse_path, to_text
from ...core.semantics import lemma1_assignment, lemma1_substituted
from ...models.formula import And, Formula, Or, Path, Top
from ...models.results import CliResult
from ...utils.exceptions import FormulaSyntaxError, PositionError
from .base import EXIT_YES, BaseHandler

_Outcome = Tuple[List[str], Dict[str, object]]

_ARITY: Dict[str, Tuple[int, ...]] = {"1": (2,), "4": (2, 3), "5": (3,), "6": (4,)}


def _disjuncts_text(f: Formula) -> str:
    """Show (p & A1) | A2 with both disjuncts bracketed when compound."""
    assert isinstance(f, Or)

    def part(side: Formula) -> str:
        return f"({to_text(side)})" if isinstance(side, (And, Or)) else to_text(side)

    return f"{part(f.left)} | {part(f.right)}"


class LemmaHandler(BaseHandler):
    """Run one of the constructions on command-line arguments."""

    def handle(self, args: Namespace) -> int:
        runners: Dict[str, Callable[[Namespace, List[str]], _Outcome]] = {
            "1": self._lemma1,
            "4": self._lemma4,
            "5": self._lemma5,
            "6": self._lemma6,
        }
        self._check_arity(args.which, args.arguments)
        lines, value = runners[args.which](args, args.arguments)
        result = CliResult(command=f"lemma {args.which}", inputs=list(args.arguments), value=value, verified=True)
        self.emit(args, result, lines + ["verified: true"])
        return EXIT_YES

    def _check_arity(self, which: str, arguments: List[str]) -> None:
        allowed = _ARITY[which]
        if len(arguments) not in allowed:
            wanted = " or ".join(str(n) for n in allowed)
            raise PositionError(f"lemma {which} takes {wanted} arguments, got {len(arguments)}")

    def _subformula_path(self, a: Formula, text: str) -> Path:
        """A dotted path, or the text of a subformula whose first position is used."""
        try:
            return parse_path(text)
        except FormulaSyntaxError:
            pass
        wanted = self.parse_formula(text)
        for path in positions(a):
            if subformula_at(a, path) == wanted:
                return path
        raise PositionError(f"{wanted} is not a subformula of {a}")

    def _lemma1(self, args: Namespace, arguments: List[str]) -> _Outcome:
        a = self.parse_formula(arguments[0])
        path = self._subformula_path(a, arguments[1])
        assignment = lemma1_assignment(a, path, self.max_letters(args))
        rendered = ", ".join(f"{name}={'T' if isinstance(value, Top) else 'F'}" for name, value in assignment.items())
        substituted = lemma1_substituted(a, path, self.max_letters(args))
        value = {"assignment": {name: to_text(c) for name, c in assignment.items()}, "substituted": str(substituted)}
        return [rendered, f"substituted: {substituted}"], value

    def _lemma4(self, args: Namespace, arguments: List[str]) -> _Outcome:
        a = self.parse_formula(arguments[0])
        p = arguments[1]
        occ = self.resolve_occurrence(a, arguments[2]) if len(arguments) == 3 else None
        extraction = lemma4_extract(a, p, occ, self.max_letters(args))
        shown = _disjuncts_text(extraction.target)
        value = {"target": shown, "a1": str(extraction.a1), "a2": str(extraction.a2), "tau": extraction.tau.pairs()}
        lines = [shown, f"A1 = {extraction.a1}", f"A2 = {extraction.a2}", f"tau: {extraction.tau}"]
        return lines, value

    def _lemma5(self, args: Namespace, arguments: List[str]) -> _Outcome:
        b = self.parse_formula(arguments[0])
        occ = self.resolve_occurrence(b, arguments[1])
        p = arguments[2]
        implant = lemma5_implant(b, occ, p, self.max_letters(args))
        value = {"b_prime": str(implant.b_prime), "eta": implant.eta.pairs()}
        return [str(implant.b_prime), f"eta: {implant.eta}"], value

    def _lemma6(self, args: Namespace, arguments: List[str]) -> _Outcome:
        a = self.parse_formula(arguments[0])
        b = self.parse_formula(arguments[1])
        x = self.resolve_occurrence(a, arguments[2])
        y = self.resolve_occurrence(b, arguments[3])
        arrow = lemma6_arrow(a, b, x, y, self.max_letters(args))
        return [str(arrow)], {"relation": arrow.pairs()}
