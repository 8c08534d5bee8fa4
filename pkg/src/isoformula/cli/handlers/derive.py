"""
isoformula.cli.handlers.derive
------------------------------
Handler for the derive command.
"""

from argparse import Namespace

from ...core.canon import ac_canonical, derive
from ...core.rewriting import replay
from ...models.results import CliResult
from ...utils.exceptions import NotATheoremError
from .base import EXIT_NO, EXIT_YES, BaseHandler


class DeriveHandler(BaseHandler):
    """Print a rewrite trace from the first formula to the second."""

    def handle(self, args: Namespace) -> int:
        a = self.parse_formula(args.formula_a)
        b = self.parse_formula(args.formula_b)
        inputs = [args.formula_a, args.formula_b]
        try:
            trace = derive(a, b)
        except NotATheoremError as e:
            result = CliResult(command="derive", inputs=inputs, verdict="no", reason=str(e))
            self.emit(args, result, [f"not a theorem: {ac_canonical(a).render()} vs {ac_canonical(b).render()}"])
            return EXIT_NO

        replays = replay(a, trace) == b
        result = CliResult(
            command="derive",
            inputs=inputs,
            verdict="yes",
            canonical=ac_canonical(a).render(),
            trace_len=len(trace),
            trace=trace.to_list(),
            verified=replays,
        )
        lines = [f"{a}  =>  {b}  ({len(trace)} steps)"]
        lines.extend(f"  {index}: {step}" for index, step in enumerate(trace))
        self.emit(args, result, lines)
        return EXIT_YES
