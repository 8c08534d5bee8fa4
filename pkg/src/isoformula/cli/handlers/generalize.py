"""
isoformula.cli.handlers.generalize
----------------------------------
Handler for the generalize command.
"""

from argparse import Namespace

from ...core.formulas import size
from ...core.linking import format_links, generalize, is_perfect, parse_links
from ...models.results import CliResult
from .base import EXIT_YES, BaseHandler


class GeneralizeHandler(BaseHandler):
    """Relabel linked occurrence classes with fresh letters."""

    def handle(self, args: Namespace) -> int:
        a = self.parse_formula(args.formula_a)
        b = self.parse_formula(args.formula_b)
        linking = parse_links(args.links, size(a), size(b))
        pair = generalize(a, b, linking, args.prefix)
        substitution = ", ".join(f"{fresh}={letter}" for fresh, letter in pair.substitution.items())
        perfect = is_perfect(linking, pair.a1, pair.b1)

        result = CliResult(
            command="generalize",
            inputs=[args.formula_a, args.formula_b, args.links],
            value={"a1": str(pair.a1), "b1": str(pair.b1), "substitution": dict(pair.substitution)},
            verified=perfect,
            diagnostics=[f"links: {format_links(linking)}"],
        )
        self.emit(args, result, [str(pair.a1), str(pair.b1), substitution])
        return EXIT_YES
