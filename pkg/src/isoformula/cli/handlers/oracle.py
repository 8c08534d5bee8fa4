"""
isoformula.cli.handlers.oracle
------------------------------
Handler for the oracle command.
"""

from argparse import Namespace

from ...core.oracle import OracleAnswer, bounded_closure, oracle_theorem, oracle_witness_search
from ...models.results import CliResult
from ...utils.exceptions import PositionError
from .base import EXIT_NO, EXIT_YES, BaseHandler


class OracleHandler(BaseHandler):
    """Run the brute-force cross-checks."""

    def handle(self, args: Namespace) -> int:
        a = self.parse_formula(args.formula_a)
        inputs = [args.formula_a] + ([args.formula_b] if args.formula_b else [])

        if args.mode == "closure":
            closure = bounded_closure(a, args.depth)
            members = sorted(str(f) for f in closure.reachable)
            result = CliResult(command="oracle closure", inputs=inputs, value=members)
            self.emit(args, result, [f"{len(members)} formulas within {args.depth} steps", *members])
            return EXIT_YES

        if not args.formula_b:
            raise PositionError(f"oracle {args.mode} needs two formulas")
        b = self.parse_formula(args.formula_b)

        if args.mode == "theorem":
            answer = oracle_theorem(a, b, args.depth)
            self.emit(args, CliResult(command="oracle theorem", inputs=inputs, verdict=answer.value), [answer.value])
            return EXIT_YES if answer is OracleAnswer.YES else EXIT_NO

        bijection = oracle_witness_search(a, b)
        if bijection is None:
            self.emit(args, CliResult(command="oracle witness", inputs=inputs, verdict="absent"), ["absent"])
            return EXIT_NO
        result = CliResult(command="oracle witness", inputs=inputs, verdict="found", value=bijection.pairs())
        self.emit(args, result, [f"found: {bijection}"])
        return EXIT_YES
