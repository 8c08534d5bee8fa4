"""
isoformula.cli.handlers.taut
----------------------------
Handler for the taut command.
"""

from argparse import Namespace

from ...core.semantics import is_tautology
from ...models.results import CliResult
from .base import EXIT_NO, EXIT_YES, BaseHandler


class TautHandler(BaseHandler):
    """Handler for the taut command."""

    def handle(self, args: Namespace) -> int:
        f = self.parse_formula(args.formula)
        holds = is_tautology(f, self.max_letters(args))
        result = CliResult(command="taut", inputs=[args.formula], verdict="yes" if holds else "no")
        self.emit(args, result, [f"{f}: {'tautology' if holds else 'not a tautology'}"])
        return EXIT_YES if holds else EXIT_NO
