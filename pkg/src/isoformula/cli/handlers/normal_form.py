"""
isoformula.cli.handlers.normal_form
-----------------------------------
Handlers for the nnf and canon commands.
"""

from argparse import Namespace

from ...core.canon import ac_canonical, nnf
from ...models.results import CliResult
from .base import EXIT_YES, BaseHandler


class NnfHandler(BaseHandler):
    """Print the ¬-reduced form and the length of the rewrite trace reaching it."""

    def handle(self, args: Namespace) -> int:
        f = self.parse_formula(args.formula)
        reduced, trace = nnf(f)
        result = CliResult(
            command="nnf",
            inputs=[args.formula],
            canonical=str(reduced),
            trace_len=len(trace),
            trace=trace.to_list() if args.trace else None,
        )
        lines = [str(reduced), f"trace: {len(trace)} steps"]
        if args.trace:
            lines.extend(f"  {step}" for step in trace)
        self.emit(args, result, lines)
        return EXIT_YES


class CanonHandler(BaseHandler):
    """Print the AC-canonical form."""

    def handle(self, args: Namespace) -> int:
        f = self.parse_formula(args.formula)
        rendered = ac_canonical(f).render()
        self.emit(args, CliResult(command="canon", inputs=[args.formula], canonical=rendered), [rendered])
        return EXIT_YES
