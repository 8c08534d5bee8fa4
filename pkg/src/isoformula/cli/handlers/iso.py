"""
isoformula.cli.handlers.iso
---------------------------
Handler for the iso command.
"""

from argparse import Namespace
from typing import List

from ...core.construct import decide_iso_boolean, decide_iso_generality
from ...models.results import CliResult, IsoVerdict, WitnessPayload
from .base import EXIT_NO, EXIT_YES, BaseHandler


class IsoHandler(BaseHandler):
    """Decide isomorphism under the boolean or the generality notion."""

    def handle(self, args: Namespace) -> int:
        a = self.parse_formula(args.formula_a)
        b = self.parse_formula(args.formula_b)
        if args.notion == "generality":
            verdict = decide_iso_generality(a, b)
        else:
            verdict = decide_iso_boolean(a, b, self.max_letters(args))

        result = CliResult(
            command="iso",
            inputs=[args.formula_a, args.formula_b],
            verdict="iso" if verdict.is_iso else "not-iso",
            reason=verdict.reason,
            trace_len=len(verdict.trace) if verdict.trace is not None else None,
        )
        if verdict.system:
            result.diagnostics.append(f"system: {verdict.system}")
        if args.witness and verdict.witness is not None:
            result.witness = WitnessPayload.from_witness(verdict.witness)
            result.verified = verdict.witness.verified

        self.emit(args, result, self._lines(verdict, args.witness))
        return EXIT_YES if verdict.is_iso else EXIT_NO

    def _lines(self, verdict: IsoVerdict, with_witness: bool) -> List[str]:
        if not verdict.is_iso:
            return [f"not iso: {verdict.reason}"]
        lines = ["iso"]
        if verdict.system:
            lines.append(f"system: {verdict.system}")
        if verdict.trace is not None:
            lines.append(f"derivation: {len(verdict.trace)} steps")
        if with_witness and verdict.witness is not None:
            lines.append(f"f: {verdict.witness.f}")
            lines.append(f"g: {verdict.witness.g}")
            lines.append(f"g.f = 1: {str(verdict.witness.gf_is_identity).lower()}")
            lines.append(f"f.g = 1: {str(verdict.witness.fg_is_identity).lower()}")
        return lines
